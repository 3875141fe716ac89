#include "ditrail/validator.hpp"

#include <algorithm>

namespace ditrail {

bool validate_trail_sequence(const Digraph& d, std::span<const VertexId> seq,
                             std::size_t arc_count, bool require_closed) {
  if (seq.size() < 2) return false;
  if (seq.size() != arc_count + 1) return false;
  std::vector<std::pair<VertexId, VertexId>> arcs;
  arcs.reserve(arc_count);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    VertexId t = seq[i], h = seq[i + 1];
    if (t < 0 || t >= d.order() || h < 0 || h >= d.order()) return false;
    if (t == h) return false;
    if (!d.has_arc(t, h)) return false;
    arcs.emplace_back(t, h);
  }
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) return false;
  if (require_closed) {
    if (seq.front() != seq.back()) return false;
    if (arc_count < 2) return false;
  }
  return true;
}

bool validate_trail(const Digraph& d, const Ditrail& t, bool require_closed) {
  return validate_trail_sequence(d, t.vertex_sequence(), t.length(), require_closed);
}

bool validate_matching(const UndirectedGraph& g, const Matching& m) {
  std::vector<VertexId> used;
  for (const Edge& e : m.edges) {
    if (e.a < 0 || e.b < 0 || e.a >= g.order() || e.b >= g.order()) return false;
    if (e.a == e.b) return false;
    if (!g.has_edge(e.a, e.b)) return false;
    used.push_back(e.a);
    used.push_back(e.b);
  }
  std::sort(used.begin(), used.end());
  return std::adjacent_find(used.begin(), used.end()) == used.end();
}

bool validate_certificate(const Digraph& d, std::span<const VertexId> s,
                          std::span<const VertexId> trail_seq, std::size_t arc_count) {
  if (s.empty()) return false;
  if (!validate_trail_sequence(d, trail_seq, arc_count, /*require_closed=*/true)) return false;
  for (VertexId v : s) {
    if (std::find(trail_seq.begin(), trail_seq.end(), v) == trail_seq.end()) return false;
  }
  return true;
}

}  // namespace ditrail
