#include "exhaustive.hpp"

#include <algorithm>

namespace ditrail::testing {

namespace {

int matching_rec(const UndirectedGraph& g, std::vector<char>& used, VertexId v) {
  while (v < g.order() && used[static_cast<std::size_t>(v)]) ++v;
  if (v == g.order()) return 0;
  used[static_cast<std::size_t>(v)] = 1;
  int best = matching_rec(g, used, v + 1);  // leave v unmatched
  for (VertexId w : g.neighbors(v)) {
    if (used[static_cast<std::size_t>(w)]) continue;
    used[static_cast<std::size_t>(w)] = 1;
    best = std::max(best, 1 + matching_rec(g, used, v + 1));
    used[static_cast<std::size_t>(w)] = 0;
  }
  used[static_cast<std::size_t>(v)] = 0;
  return best;
}

bool strong_under_mask(const Digraph& d, std::uint32_t removed_mask) {
  const auto arcs = d.arcs();
  const VertexId n = d.order();
  if (n == 0) return false;
  // Reachability from every vertex over the surviving arcs.
  for (VertexId src = 0; src < n; ++src) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexId> stack = {src};
    seen[static_cast<std::size_t>(src)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < arcs.size(); ++i) {
        if (removed_mask & (std::uint32_t(1) << i)) continue;
        if (arcs[i].tail != v) continue;
        if (!seen[static_cast<std::size_t>(arcs[i].head)]) {
          seen[static_cast<std::size_t>(arcs[i].head)] = 1;
          stack.push_back(arcs[i].head);
        }
      }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end()) return false;
  }
  return true;
}

}  // namespace

int exhaustive_matching_number(const UndirectedGraph& g) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  return matching_rec(g, used, 0);
}

int exhaustive_lambda(const Digraph& d) {
  if (!strong_under_mask(d, 0)) return 0;
  const std::size_t m = d.arc_count();
  for (int k = 1; k <= static_cast<int>(m); ++k) {
    // All removal subsets of size k.
    std::vector<int> pick(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i;
    for (;;) {
      std::uint32_t mask = 0;
      for (int i : pick) mask |= std::uint32_t(1) << i;
      if (!strong_under_mask(d, mask)) return k;
      int i = k - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == static_cast<int>(m) - k + i) --i;
      if (i < 0) break;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  return static_cast<int>(m);
}

bool exhaustive_balanced_cover(const Digraph& d, std::span<const VertexId> w) {
  const auto arcs = d.arcs();
  const std::size_t m = arcs.size();
  for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << m); ++mask) {
    std::vector<int> balance(static_cast<std::size_t>(d.order()), 0);
    std::vector<char> incident(static_cast<std::size_t>(d.order()), 0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask & (std::uint32_t(1) << i))) continue;
      ++balance[static_cast<std::size_t>(arcs[i].tail)];
      --balance[static_cast<std::size_t>(arcs[i].head)];
      incident[static_cast<std::size_t>(arcs[i].tail)] = 1;
      incident[static_cast<std::size_t>(arcs[i].head)] = 1;
    }
    if (std::any_of(balance.begin(), balance.end(), [](int b) { return b != 0; })) continue;
    bool covers = true;
    for (VertexId v : w) covers &= incident[static_cast<std::size_t>(v)] != 0;
    if (!covers) continue;
    // Connectivity over incident vertices, ignoring orientation.
    VertexId root = -1;
    for (VertexId v = 0; v < d.order(); ++v) {
      if (incident[static_cast<std::size_t>(v)]) {
        root = v;
        break;
      }
    }
    std::vector<char> seen(static_cast<std::size_t>(d.order()), 0);
    std::vector<VertexId> stack = {root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (std::size_t i = 0; i < m; ++i) {
        if (!(mask & (std::uint32_t(1) << i))) continue;
        VertexId other = -1;
        if (arcs[i].tail == v) other = arcs[i].head;
        if (arcs[i].head == v) other = arcs[i].tail;
        if (other >= 0 && !seen[static_cast<std::size_t>(other)]) {
          seen[static_cast<std::size_t>(other)] = 1;
          stack.push_back(other);
        }
      }
    }
    bool connected = true;
    for (VertexId v = 0; v < d.order(); ++v) {
      if (incident[static_cast<std::size_t>(v)] && !seen[static_cast<std::size_t>(v)]) {
        connected = false;
        break;
      }
    }
    if (connected) return true;
  }
  return false;
}

std::optional<std::vector<Arc>> exhaustive_euler_circuit(std::span<const Arc> arcs,
                                                         VertexId start) {
  std::vector<char> used(arcs.size(), 0);
  std::vector<Arc> seq;
  auto rec = [&](auto&& self, VertexId at) -> bool {
    if (seq.size() == arcs.size()) return at == start;
    for (std::size_t i = 0; i < arcs.size(); ++i) {
      if (used[i] || arcs[i].tail != at) continue;
      used[i] = 1;
      seq.push_back(arcs[i]);
      if (self(self, arcs[i].head)) return true;
      seq.pop_back();
      used[i] = 0;
    }
    return false;
  };
  if (rec(rec, start)) return seq;
  return std::nullopt;
}

Digraph random_test_digraph(std::mt19937_64& rng, VertexId n, std::size_t arc_count) {
  std::vector<Arc> pairs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) pairs.push_back(Arc{u, v});
    }
  }
  for (std::size_t i = 0; i + 1 < pairs.size(); ++i) {
    std::size_t j = i + static_cast<std::size_t>(rng() % (pairs.size() - i));
    std::swap(pairs[i], pairs[j]);
  }
  arc_count = std::min(arc_count, pairs.size());
  pairs.resize(arc_count);
  return Digraph(n, std::move(pairs));
}

std::vector<VertexId> random_vertex_subset(std::mt19937_64& rng, VertexId n, VertexId size) {
  std::vector<VertexId> pool(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
  for (VertexId i = 0; i < size; ++i) {
    VertexId j = i + static_cast<VertexId>(rng() % static_cast<std::uint64_t>(n - i));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  std::vector<VertexId> out(pool.begin(), pool.begin() + size);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace ditrail::testing
