#include "ditrail/trail.hpp"

#include <algorithm>
#include <map>

#include "ditrail/errors.hpp"

namespace ditrail {

Ditrail::Ditrail(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  if (arcs_.empty()) throw InputError("Ditrail: empty arc sequence");
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    if (arcs_[i].tail == arcs_[i].head) {
      throw InputError("Ditrail: loop arc " + to_string(arcs_[i]));
    }
    if (i + 1 < arcs_.size() && arcs_[i].head != arcs_[i + 1].tail) {
      throw InputError("Ditrail: arcs " + to_string(arcs_[i]) + " and " +
                       to_string(arcs_[i + 1]) + " do not chain");
    }
  }
  std::vector<Arc> sorted = arcs_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw InputError("Ditrail: repeated arc");
  }
}

Ditrail Ditrail::from_vertex_sequence(std::span<const VertexId> seq) {
  if (seq.size() < 2) throw InputError("Ditrail: vertex sequence too short");
  std::vector<Arc> arcs;
  arcs.reserve(seq.size() - 1);
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    arcs.push_back(Arc{seq[i], seq[i + 1]});
  }
  return Ditrail(std::move(arcs));
}

std::vector<VertexId> Ditrail::vertex_sequence() const {
  std::vector<VertexId> seq;
  seq.reserve(arcs_.size() + 1);
  seq.push_back(arcs_.front().tail);
  for (const Arc& a : arcs_) seq.push_back(a.head);
  return seq;
}

std::vector<VertexId> Ditrail::vertex_set() const {
  std::vector<VertexId> vs = vertex_sequence();
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

bool Ditrail::visits(VertexId v) const {
  if (arcs_.front().tail == v) return true;
  return std::any_of(arcs_.begin(), arcs_.end(), [v](const Arc& a) { return a.head == v; });
}

bool Ditrail::uses_arc(const Arc& a) const {
  return std::find(arcs_.begin(), arcs_.end(), a) != arcs_.end();
}

Ditrail subtrail_of_closed(const Ditrail& q, VertexId from, VertexId to) {
  if (!q.is_closed()) throw InputError("subtrail_of_closed: trail not closed");
  auto arcs = q.arcs();
  std::size_t start = arcs.size();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (arcs[i].tail == from) {
      start = i;
      break;
    }
  }
  // Every vertex on a closed trail occurs as some arc's tail.
  if (start == arcs.size()) {
    throw InputError("subtrail_of_closed: vertex " + std::to_string(from) + " not on trail");
  }
  if (!q.visits(to)) {
    throw InputError("subtrail_of_closed: vertex " + std::to_string(to) + " not on trail");
  }
  std::vector<Arc> out;
  if (from == to) {
    // Full rotation.
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      out.push_back(arcs[(start + k) % arcs.size()]);
    }
  } else {
    // Up to the first arrival at `to`.
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      const Arc& a = arcs[(start + k) % arcs.size()];
      out.push_back(a);
      if (a.head == to) break;
    }
  }
  return Ditrail(std::move(out));
}

Ditrail splice(const Ditrail& q, const Ditrail& t, VertexId x, VertexId y) {
  if (!q.is_closed()) throw InputError("splice: host trail not closed");
  if (t.initial_vertex() != x || t.terminal_vertex() != y) {
    throw InputError("splice: T is not an (x,y)-ditrail");
  }
  if (!q.visits(x) || !q.visits(y)) {
    throw InputError("splice: x or y not on the host trail");
  }
  for (const Arc& a : t.arcs()) {
    if (q.uses_arc(a)) throw SpliceError("splice: arc " + to_string(a) + " already on host trail");
  }
  Ditrail kept = subtrail_of_closed(q, y, x);
  std::vector<Arc> arcs(kept.arcs().begin(), kept.arcs().end());
  arcs.insert(arcs.end(), t.arcs().begin(), t.arcs().end());
  return Ditrail(std::move(arcs));
}

std::optional<BalancedSubdigraph> make_balanced_subdigraph(const Digraph& d,
                                                           std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  if (std::adjacent_find(arcs.begin(), arcs.end()) != arcs.end()) {
    throw InputError("make_balanced_subdigraph: duplicate arc");
  }
  for (const Arc& a : arcs) {
    if (!d.has_arc(a.tail, a.head)) {
      throw InputError("make_balanced_subdigraph: arc " + to_string(a) + " not in digraph");
    }
  }
  std::vector<int> balance(static_cast<std::size_t>(d.order()), 0);
  for (const Arc& a : arcs) {
    ++balance[static_cast<std::size_t>(a.tail)];
    --balance[static_cast<std::size_t>(a.head)];
  }
  if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) {
    return std::nullopt;
  }

  BalancedSubdigraph b;
  b.arcs = std::move(arcs);
  // Connectivity of the underlying graph restricted to incident vertices.
  if (!b.arcs.empty()) {
    std::map<VertexId, std::vector<VertexId>> adj;
    for (const Arc& a : b.arcs) {
      adj[a.tail].push_back(a.head);
      adj[a.head].push_back(a.tail);
    }
    std::vector<VertexId> stack = {b.arcs.front().tail};
    std::map<VertexId, bool> seen = {{stack.front(), true}};
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : adj[v]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    b.connected = true;
    for (const auto& [v, _] : adj) {
      if (!seen[v]) {
        b.connected = false;
        break;
      }
    }
  }
  return b;
}

Ditrail hierholzer(const BalancedSubdigraph& b, VertexId start) {
  if (b.arcs.empty()) throw ContractViolation("hierholzer: empty arc set");
  if (!b.connected) throw ContractViolation("hierholzer: arc set not connected");
  std::map<VertexId, int> balance;
  for (const Arc& a : b.arcs) {
    ++balance[a.tail];
    --balance[a.head];
  }
  for (const auto& [v, bal] : balance) {
    if (bal != 0) throw ContractViolation("hierholzer: unbalanced at " + std::to_string(v));
  }

  std::map<VertexId, std::vector<VertexId>> out;
  for (const Arc& a : b.arcs) out[a.tail].push_back(a.head);
  for (auto& [v, heads] : out) std::sort(heads.begin(), heads.end());
  if (!out.contains(start)) {
    throw ContractViolation("hierholzer: start vertex not incident to the arc set");
  }

  std::map<VertexId, std::size_t> next;
  std::vector<VertexId> stack = {start};
  std::vector<VertexId> circuit;
  while (!stack.empty()) {
    VertexId v = stack.back();
    auto& heads = out[v];
    std::size_t& i = next[v];
    if (i < heads.size()) {
      stack.push_back(heads[i++]);
    } else {
      circuit.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(circuit.begin(), circuit.end());
  if (circuit.size() != b.arcs.size() + 1) {
    throw ContractViolation("hierholzer: arc set not traversable in one circuit");
  }
  return Ditrail::from_vertex_sequence(circuit);
}

}  // namespace ditrail
