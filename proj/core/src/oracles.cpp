#include "ditrail/oracles.hpp"

#include <algorithm>
#include <unordered_set>

#include "ditrail/errors.hpp"

namespace ditrail {

namespace {

std::vector<VertexId> checked_vertex_set(const Digraph& d, std::span<const VertexId> w,
                                         const char* who) {
  if (w.empty()) throw InputError(std::string(who) + ": empty vertex set");
  std::vector<VertexId> out(w.begin(), w.end());
  for (VertexId v : out) {
    if (v < 0 || v >= d.order()) {
      throw InputError(std::string(who) + ": vertex " + std::to_string(v) + " out of range");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// 128-bit arc-usage key; memoization is skipped for |A| > 128.
struct StateKey {
  std::uint64_t lo = 0, hi = 0;
  VertexId at = 0;

  friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const {
    std::uint64_t h = k.lo * 0x9e3779b97f4a7c15ULL;
    h ^= (k.hi + 0xbf58476d1ce4e5b9ULL) + (h << 6) + (h >> 2);
    h ^= (std::uint64_t(k.at) + 0x94d049bb133111ebULL) + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

class ClosedTrailSearch {
 public:
  ClosedTrailSearch(const Digraph& d, std::vector<VertexId> w, SearchBudget budget)
      : d_(d), w_(std::move(w)), cap_(budget.max_expansions) {
    root_ = w_.front();
    m_ = d_.arc_count();
    used_.assign(m_, 0);
    out_arcs_.assign(static_cast<std::size_t>(d_.order()), {});
    for (std::size_t i = 0; i < m_; ++i) {
      out_arcs_[static_cast<std::size_t>(d_.arcs()[i].tail)].push_back(i);
    }
    // d.arcs() is (tail, head)-sorted, so per-vertex lists are head-ascending.
    in_w_.assign(static_cast<std::size_t>(d_.order()), 0);
    for (VertexId v : w_) in_w_[static_cast<std::size_t>(v)] = 1;
    visit_count_.assign(static_cast<std::size_t>(d_.order()), 0);
    seen_.assign(static_cast<std::size_t>(d_.order()), 0);
    memo_enabled_ = m_ <= 128;
  }

  OracleResult run() {
    OracleResult res;
    visit_count_[static_cast<std::size_t>(root_)] = 1;
    covered_ = 1;  // root is in W by construction
    bool found = dfs(root_);
    res.expansions = expansions_;
    if (found) {
      res.status = SearchStatus::found;
      res.witness = Ditrail(path_);
    } else {
      res.status = cut_ ? SearchStatus::budget_exhausted : SearchStatus::none;
    }
    return res;
  }

 private:
  bool dfs(VertexId v) {
    if (++expansions_ > cap_) {
      cut_ = true;
      return false;
    }
    if (v == root_ && covered_ == w_.size() && path_.size() >= 2) return true;
    if (!closable_from(v)) return false;

    StateKey key;
    if (memo_enabled_) {
      key = make_key(v);
      if (failed_.contains(key)) return false;
    }
    bool subtree_clean = true;
    for (std::size_t id : out_arcs_[static_cast<std::size_t>(v)]) {
      if (used_[id]) continue;
      const Arc& a = d_.arcs()[id];
      used_[id] = 1;
      path_.push_back(a);
      std::size_t head = static_cast<std::size_t>(a.head);
      if (in_w_[head] && visit_count_[head] == 0) ++covered_;
      ++visit_count_[head];
      bool ok = dfs(a.head);
      if (!ok && cut_) subtree_clean = false;
      if (!ok) {
        --visit_count_[head];
        if (in_w_[head] && visit_count_[head] == 0) --covered_;
        path_.pop_back();
        used_[id] = 0;
      }
      if (ok) return true;
    }
    if (memo_enabled_ && subtree_clean) failed_.insert(key);
    return false;
  }

  // Over unused arcs: the root and every uncovered W-vertex must still be
  // reachable from v, otherwise no extension of this trail can close.
  bool closable_from(VertexId v) {
    reach_stamp_++;
    stack_.clear();
    stack_.push_back(v);
    seen_[static_cast<std::size_t>(v)] = reach_stamp_;
    std::size_t need = w_.size() - covered_ + (v != root_ ? 1 : 0);
    std::size_t got = 0;
    if (need == 0) return true;
    while (!stack_.empty()) {
      VertexId u = stack_.back();
      stack_.pop_back();
      for (std::size_t id : out_arcs_[static_cast<std::size_t>(u)]) {
        if (used_[id]) continue;
        VertexId h = d_.arcs()[id].head;
        std::size_t hi = static_cast<std::size_t>(h);
        if (seen_[hi] == reach_stamp_) continue;
        seen_[hi] = reach_stamp_;
        stack_.push_back(h);
        if ((in_w_[hi] && visit_count_[hi] == 0) || (h == root_ && v != root_)) {
          if (++got == need) return true;
        }
      }
    }
    return got == need;
  }

  StateKey make_key(VertexId v) const {
    StateKey k;
    for (std::size_t i = 0; i < m_; ++i) {
      if (!used_[i]) continue;
      if (i < 64) {
        k.lo |= std::uint64_t(1) << i;
      } else {
        k.hi |= std::uint64_t(1) << (i - 64);
      }
    }
    k.at = v;
    return k;
  }

  const Digraph& d_;
  std::vector<VertexId> w_;
  std::uint64_t cap_;
  VertexId root_;
  std::size_t m_ = 0;
  std::vector<char> used_;
  std::vector<std::vector<std::size_t>> out_arcs_;
  std::vector<char> in_w_;
  std::vector<int> visit_count_;
  std::vector<Arc> path_;
  std::size_t covered_ = 0;
  std::uint64_t expansions_ = 0;
  bool cut_ = false;
  bool memo_enabled_ = false;
  std::unordered_set<StateKey, StateKeyHash> failed_;

  // reachability scratch
  std::vector<VertexId> stack_;
  std::vector<std::uint32_t> seen_;
  std::uint32_t reach_stamp_ = 0;
};

}  // namespace

OracleResult closed_ditrail_through(const Digraph& d, std::span<const VertexId> w,
                                    SearchBudget budget) {
  std::vector<VertexId> ws = checked_vertex_set(d, w, "closed_ditrail_through");
  ClosedTrailSearch search(d, std::move(ws), budget);
  return search.run();
}

OracleResult closed_ditrail_through_subsets(const Digraph& d, std::span<const VertexId> w,
                                            SearchBudget budget) {
  std::vector<VertexId> ws = checked_vertex_set(d, w, "closed_ditrail_through_subsets");
  const auto arcs = d.arcs();
  const std::size_t m = arcs.size();
  OracleResult res;

  std::vector<char> chosen(m, 0);
  std::vector<int> balance(static_cast<std::size_t>(d.order()), 0);
  // Remaining out/in incidences per vertex over the undecided suffix, for
  // the balance-feasibility prune.
  std::vector<int> out_left(static_cast<std::size_t>(d.order()), 0);
  std::vector<int> in_left(static_cast<std::size_t>(d.order()), 0);
  for (const Arc& a : arcs) {
    ++out_left[static_cast<std::size_t>(a.tail)];
    ++in_left[static_cast<std::size_t>(a.head)];
  }

  std::vector<char> in_w(static_cast<std::size_t>(d.order()), 0);
  for (VertexId v : ws) in_w[static_cast<std::size_t>(v)] = 1;

  bool cut = false;
  std::optional<Ditrail> witness;

  auto leaf_ok = [&]() -> bool {
    std::vector<Arc> subset;
    for (std::size_t i = 0; i < m; ++i) {
      if (chosen[i]) subset.push_back(arcs[i]);
    }
    if (subset.empty()) return false;
    auto b = make_balanced_subdigraph(d, std::move(subset));
    if (!b || !b->connected) return false;
    std::vector<char> incident(static_cast<std::size_t>(d.order()), 0);
    for (const Arc& a : b->arcs) {
      incident[static_cast<std::size_t>(a.tail)] = 1;
      incident[static_cast<std::size_t>(a.head)] = 1;
    }
    for (VertexId v : ws) {
      if (!incident[static_cast<std::size_t>(v)]) return false;
    }
    witness = hierholzer(*b, ws.front());
    return true;
  };

  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (++res.expansions > budget.max_expansions) {
      cut = true;
      return false;
    }
    if (i == m) return leaf_ok();
    // Feasibility: a vertex imbalance must still be coverable by suffix arcs.
    for (VertexId v = 0; v < d.order(); ++v) {
      int b = balance[static_cast<std::size_t>(v)];
      if (b > 0 && b > in_left[static_cast<std::size_t>(v)]) return false;
      if (b < 0 && -b > out_left[static_cast<std::size_t>(v)]) return false;
    }
    const Arc& a = arcs[i];
    std::size_t t = static_cast<std::size_t>(a.tail), h = static_cast<std::size_t>(a.head);
    --out_left[t];
    --in_left[h];

    chosen[i] = 1;
    ++balance[t];
    --balance[h];
    if (self(self, i + 1)) return true;
    chosen[i] = 0;
    --balance[t];
    ++balance[h];

    if (self(self, i + 1)) return true;
    ++out_left[t];
    ++in_left[h];
    return false;
  };

  if (rec(rec, 0)) {
    res.status = SearchStatus::found;
    res.witness = std::move(witness);
  } else {
    res.status = cut ? SearchStatus::budget_exhausted : SearchStatus::none;
  }
  return res;
}

OracleResult is_closed_trailable(const Digraph& d, std::span<const VertexId> s,
                                 SearchBudget budget) {
  return closed_ditrail_through(d, s, budget);
}

OracleResult is_supereulerian(const Digraph& d, SearchBudget budget) {
  if (d.order() == 0) throw InputError("is_supereulerian: empty digraph");
  std::vector<VertexId> all(static_cast<std::size_t>(d.order()));
  for (VertexId v = 0; v < d.order(); ++v) all[static_cast<std::size_t>(v)] = v;
  return closed_ditrail_through(d, all, budget);
}

OracleResult dicycle_through(const Digraph& d, std::span<const VertexId> s,
                             SearchBudget budget) {
  std::vector<VertexId> ss = checked_vertex_set(d, s, "dicycle_through");
  if (d.order() > 63) throw InputError("dicycle_through: supports at most 63 vertices");
  OracleResult res;
  const VertexId root = ss.front();
  std::uint64_t s_mask = 0;
  for (VertexId v : ss) s_mask |= std::uint64_t(1) << v;

  std::unordered_set<StateKey, StateKeyHash> failed;
  bool cut = false;
  std::vector<VertexId> path = {root};

  // Reachability over unvisited vertices: uncovered S plus a way back.
  auto closable = [&](VertexId v, std::uint64_t visited) -> bool {
    std::uint64_t uncovered = s_mask & ~visited;
    std::uint64_t seen = std::uint64_t(1) << v;
    std::vector<VertexId> stack = {v};
    bool can_close = d.has_arc(v, root);
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (VertexId h : d.out_neighbors(u)) {
        std::uint64_t bit = std::uint64_t(1) << h;
        if ((visited & bit) || (seen & bit)) continue;
        seen |= bit;
        stack.push_back(h);
        if (d.has_arc(h, root)) can_close = true;
      }
    }
    return can_close && (uncovered & ~seen) == 0;
  };

  auto rec = [&](auto&& self, VertexId v, std::uint64_t visited) -> bool {
    if (++res.expansions > budget.max_expansions) {
      cut = true;
      return false;
    }
    if ((s_mask & ~visited) == 0 && v != root && d.has_arc(v, root)) return true;
    if (!closable(v, visited)) return false;
    StateKey key{visited, 0, v};
    if (failed.contains(key)) return false;
    bool clean = true;
    for (VertexId h : d.out_neighbors(v)) {
      if (visited & (std::uint64_t(1) << h)) continue;
      path.push_back(h);
      bool ok = self(self, h, visited | (std::uint64_t(1) << h));
      if (ok) return true;
      if (cut) clean = false;
      path.pop_back();
    }
    if (clean) failed.insert(key);
    return false;
  };

  if (rec(rec, root, std::uint64_t(1) << root)) {
    path.push_back(root);
    res.status = SearchStatus::found;
    res.witness = Ditrail::from_vertex_sequence(path);
  } else {
    res.status = cut ? SearchStatus::budget_exhausted : SearchStatus::none;
  }
  return res;
}

StrictStrongResult is_s_strictly_strong(const Digraph& d, std::span<const VertexId> s,
                                        SearchBudget budget) {
  std::vector<VertexId> ss = checked_vertex_set(d, s, "is_s_strictly_strong");
  if (ss.size() < 2) throw InputError("is_s_strictly_strong: need |S| >= 2");
  StrictStrongResult out;
  bool any_cut = false;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      if (are_adjacent(d, ss[i], ss[j])) continue;
      std::vector<VertexId> pair = {ss[i], ss[j]};
      OracleResult r = closed_ditrail_through(d, pair, budget);
      out.expansions += r.expansions;
      if (r.found()) {
        out.status = SearchStatus::found;
        out.witness_pair = {ss[i], ss[j]};
        out.witness = std::move(r.witness);
        return out;
      }
      if (r.status == SearchStatus::budget_exhausted) any_cut = true;
    }
  }
  out.status = any_cut ? SearchStatus::budget_exhausted : SearchStatus::none;
  return out;
}

OracleResult ditrail_with_vertex_set(const Digraph& d, VertexId from, VertexId to,
                                     std::span<const VertexId> vset, SearchBudget budget) {
  std::vector<VertexId> vs = checked_vertex_set(d, vset, "ditrail_with_vertex_set");
  auto at = [&](VertexId v) {
    return std::binary_search(vs.begin(), vs.end(), v);
  };
  if (!at(from) || !at(to)) {
    throw InputError("ditrail_with_vertex_set: endpoints must lie in the vertex set");
  }

  // Arcs of D<vset> only, kept in global (tail, head) order.
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    if (at(a.tail) && at(a.head)) arcs.push_back(a);
  }
  const std::size_t m = arcs.size();
  OracleResult res;
  if (m > 128) throw InputError("ditrail_with_vertex_set: too many induced arcs");

  std::vector<std::vector<std::size_t>> out_arcs(static_cast<std::size_t>(d.order()));
  for (std::size_t i = 0; i < m; ++i) {
    out_arcs[static_cast<std::size_t>(arcs[i].tail)].push_back(i);
  }
  std::vector<char> used(m, 0);
  std::vector<int> visits(static_cast<std::size_t>(d.order()), 0);
  visits[static_cast<std::size_t>(from)] = 1;
  std::size_t covered = 1;
  std::vector<Arc> path;
  std::unordered_set<StateKey, StateKeyHash> failed;
  bool cut = false;

  auto make_key = [&](VertexId v) {
    StateKey k;
    for (std::size_t i = 0; i < m; ++i) {
      if (!used[i]) continue;
      if (i < 64) {
        k.lo |= std::uint64_t(1) << i;
      } else {
        k.hi |= std::uint64_t(1) << (i - 64);
      }
    }
    k.at = v;
    return k;
  };

  auto rec = [&](auto&& self, VertexId v) -> bool {
    if (++res.expansions > budget.max_expansions) {
      cut = true;
      return false;
    }
    if (v == to && covered == vs.size() && !path.empty()) return true;
    StateKey key = make_key(v);
    if (failed.contains(key)) return false;
    bool clean = true;
    for (std::size_t id : out_arcs[static_cast<std::size_t>(v)]) {
      if (used[id]) continue;
      const Arc& a = arcs[id];
      std::size_t h = static_cast<std::size_t>(a.head);
      used[id] = 1;
      path.push_back(a);
      if (visits[h]++ == 0) ++covered;
      if (self(self, a.head)) return true;
      if (cut) clean = false;
      if (--visits[h] == 0) --covered;
      path.pop_back();
      used[id] = 0;
    }
    if (clean) failed.insert(key);
    return false;
  };

  if (rec(rec, from)) {
    res.status = SearchStatus::found;
    res.witness = Ditrail(path);
  } else {
    res.status = cut ? SearchStatus::budget_exhausted : SearchStatus::none;
  }
  return res;
}

bool trail_degree_bound_holds(const Digraph& d, const Ditrail& t, VertexId x,
                              SearchBudget budget) {
  std::vector<VertexId> tv = t.vertex_set();
  int bound = static_cast<int>(tv.size());
  if (restricted_degree(d, x, tv).total <= bound) return true;
  // Degree exceeds |V(T)|: the bound holds only if the extending ditrail
  // exists, which we decide exactly.
  if (t.visits(x)) return true;  // premise vacuous: V(T) + {x} = V(T)
  std::vector<VertexId> vset = tv;
  vset.push_back(x);
  OracleResult r =
      ditrail_with_vertex_set(d, t.initial_vertex(), t.terminal_vertex(), vset, budget);
  if (r.status == SearchStatus::budget_exhausted) {
    throw ContractViolation("trail_degree_bound_holds: undecidable within budget");
  }
  return r.found();
}

}  // namespace ditrail
