#include "ditrail/constructor.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "ditrail/errors.hpp"
#include "ditrail/matching.hpp"
#include "ditrail/validator.hpp"

namespace ditrail {

namespace {

constexpr std::size_t kPathEnumerationCap = 4000;
constexpr std::size_t kPairTrialCap = 200000;

std::vector<VertexId> checked_target(const Digraph& d, std::span<const VertexId> s) {
  if (s.empty()) throw InputError("construct: empty target set");
  std::vector<VertexId> out(s.begin(), s.end());
  for (VertexId v : out) {
    if (v < 0 || v >= d.order()) throw InputError("construct: target vertex out of range");
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string join(std::span<const VertexId> vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ' ';
    out << vs[i];
  }
  return out.str();
}

std::size_t coverage(const Ditrail& t, std::span<const VertexId> target) {
  std::size_t c = 0;
  for (VertexId v : target) c += t.visits(v) ? 1 : 0;
  return c;
}

// Simple dipaths from `from` whose interior avoids `blocked` and whose last
// vertex is the first `blocked` vertex hit (forward), or, reversed, paths
// into `from`. Enumerated in ascending length, lexicographic within a
// length; `truncated` reports a hit of the enumeration cap.
std::vector<std::vector<VertexId>> paths_to_set(const Digraph& d, VertexId from,
                                                const std::vector<char>& blocked, bool reverse,
                                                bool& truncated) {
  std::vector<std::vector<VertexId>> found;
  std::vector<VertexId> path = {from};
  std::vector<char> on_path(static_cast<std::size_t>(d.order()), 0);
  on_path[static_cast<std::size_t>(from)] = 1;
  truncated = false;

  auto neighbors = [&](VertexId v) -> const std::vector<VertexId>& {
    return reverse ? d.in_neighbors(v) : d.out_neighbors(v);
  };

  // Iterative deepening keeps the ascending-length order exact until the
  // cap is hit.
  for (int depth = 1; depth < d.order() + 1; ++depth) {
    bool any_deeper = false;
    auto dfs = [&](auto&& self, VertexId v, int left) -> bool {
      if (found.size() >= kPathEnumerationCap) {
        truncated = true;
        return true;
      }
      for (VertexId w : neighbors(v)) {
        if (blocked[static_cast<std::size_t>(w)]) {
          if (left == 1) {
            path.push_back(w);
            found.push_back(path);
            path.pop_back();
            if (found.size() >= kPathEnumerationCap) {
              truncated = true;
              return true;
            }
          }
          continue;
        }
        if (on_path[static_cast<std::size_t>(w)]) continue;
        if (left == 1) {
          any_deeper = true;
          continue;
        }
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        bool stop = self(self, w, left - 1);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
        if (stop) return true;
      }
      return false;
    };
    if (dfs(dfs, from, depth)) break;
    if (!any_deeper && depth > 1) break;
  }
  if (reverse) {
    for (auto& p : found) std::reverse(p.begin(), p.end());
  }
  return found;
}

struct SplitPlan {
  std::size_t enter_a = 0, leave_a = 0;  // positions on the trail's cyclic sequence
  std::size_t enter_b = 0, leave_b = 0;
};

}  // namespace

AugmentationState::AugmentationState(const Digraph& d, std::vector<VertexId> target,
                                     Ditrail trail)
    : d_(&d), target_(std::move(target)), trail_(std::move(trail)) {
  if (!validate_trail(*d_, trail_, /*require_closed=*/true)) {
    throw ContractViolation("AugmentationState: seed trail invalid");
  }
}

std::vector<VertexId> AugmentationState::pending() const {
  std::vector<VertexId> out;
  for (VertexId v : target_) {
    if (!trail_.visits(v)) out.push_back(v);
  }
  return out;
}

std::size_t AugmentationState::covered_count() const { return coverage(trail_, target_); }

void AugmentationState::accept(Ditrail next, std::string move, std::string params) {
  if (!validate_trail(*d_, next, /*require_closed=*/true)) {
    throw ContractViolation("move '" + move + "' produced an invalid trail");
  }
  if (coverage(next, target_) <= covered_count()) {
    throw ContractViolation("move '" + move + "' did not grow target coverage");
  }
  trail_ = std::move(next);
  moves_.push_back(MoveRecord{std::move(move), std::move(params), trail_.length()});
}

void AugmentationState::record(std::string move, std::string params) {
  moves_.push_back(MoveRecord{std::move(move), std::move(params), trail_.length()});
}

std::optional<Ditrail> initial_trail(const Digraph& d, std::span<const VertexId> s) {
  std::vector<VertexId> target = checked_target(d, s);
  std::optional<Ditrail> best;
  std::size_t best_cover = 0;

  for (VertexId seed : target) {
    // Shortest dicycle through `seed`: BFS out of seed, close with an arc
    // back into it.
    std::vector<int> dist(static_cast<std::size_t>(d.order()), -1);
    std::vector<VertexId> parent(static_cast<std::size_t>(d.order()), -1);
    std::queue<VertexId> q;
    dist[static_cast<std::size_t>(seed)] = 0;
    q.push(seed);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId w : d.out_neighbors(v)) {
        if (dist[static_cast<std::size_t>(w)] < 0) {
          dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
          parent[static_cast<std::size_t>(w)] = v;
          q.push(w);
        }
      }
    }
    VertexId closer = -1;
    for (VertexId v : d.in_neighbors(seed)) {
      if (dist[static_cast<std::size_t>(v)] < 0) continue;
      if (closer < 0 || dist[static_cast<std::size_t>(v)] < dist[static_cast<std::size_t>(closer)]) {
        closer = v;
      }
    }
    if (closer < 0) continue;
    std::vector<VertexId> cycle;
    for (VertexId v = closer; v != -1; v = parent[static_cast<std::size_t>(v)]) {
      cycle.push_back(v);
    }
    std::reverse(cycle.begin(), cycle.end());
    cycle.push_back(seed);
    Ditrail t = Ditrail::from_vertex_sequence(cycle);
    std::size_t cover = coverage(t, target);
    if (!best || cover > best_cover ||
        (cover == best_cover && t.length() < best->length())) {
      best = std::move(t);
      best_cover = cover;
    }
  }
  return best;
}

MoveOutcome absorb_two_cycle(AugmentationState& state, VertexId x, VertexId w) {
  const Digraph& d = state.digraph();
  const Ditrail& q = state.trail();
  if (q.visits(x)) return {false, "vertex already on trail"};
  if (!q.visits(w)) return {false, "attachment vertex not on trail"};
  if (!d.has_arc(w, x) || !d.has_arc(x, w)) return {false, "2-cycle arcs missing"};
  Arc out{w, x}, back{x, w};
  if (q.uses_arc(out) || q.uses_arc(back)) return {false, "2-cycle arc already used"};
  Ditrail detour(std::vector<Arc>{out, back});
  Ditrail next = splice(q, detour, w, w);
  std::string params = "x=" + std::to_string(x) + " w=" + std::to_string(w);
  state.accept(std::move(next), "absorb-two-cycle", params);
  return {true, ""};
}

MoveOutcome augment_via_external_path(AugmentationState& state, VertexId pending) {
  const Digraph& d = state.digraph();
  const Ditrail& q = state.trail();
  if (q.visits(pending)) return {false, "vertex already on trail"};

  std::vector<char> on_q(static_cast<std::size_t>(d.order()), 0);
  for (VertexId v : q.vertex_set()) on_q[static_cast<std::size_t>(v)] = 1;

  bool trunc_out = false, trunc_in = false;
  // exits: pending -> ... -> y with y on Q; entries: x -> ... -> pending.
  std::vector<std::vector<VertexId>> exits = paths_to_set(d, pending, on_q, false, trunc_out);
  std::vector<std::vector<VertexId>> entries = paths_to_set(d, pending, on_q, true, trunc_in);
  if (exits.empty() || entries.empty()) {
    return {false, "no external connection between vertex and trail"};
  }

  // Group by length; paths_to_set returns ascending lengths already.
  auto bucket = [](const std::vector<std::vector<VertexId>>& paths) {
    std::vector<std::pair<std::size_t, std::size_t>> by_len;  // [begin, end) runs
    std::size_t i = 0;
    while (i < paths.size()) {
      std::size_t j = i;
      while (j < paths.size() && paths[j].size() == paths[i].size()) ++j;
      by_len.emplace_back(i, j);
      i = j;
    }
    return by_len;
  };
  auto exit_runs = bucket(exits);
  auto entry_runs = bucket(entries);

  std::size_t trials = 0;
  // Ascending combined order |V(entry)| + |V(exit)|; both share `pending`.
  std::size_t max_sum = entries.back().size() + exits.back().size();
  for (std::size_t total = entries.front().size() + exits.front().size(); total <= max_sum;
       ++total) {
    for (const auto& [eb, ee] : entry_runs) {
      std::size_t elen = entries[eb].size();
      if (elen >= total) break;
      for (const auto& [xb, xe] : exit_runs) {
        if (exits[xb].size() != total - elen) continue;
        for (std::size_t i = eb; i < ee; ++i) {
          for (std::size_t j = xb; j < xe; ++j) {
            if (++trials > kPairTrialCap) {
              return {false, "pair trial cap exhausted"};
            }
            const auto& entry = entries[i];  // x ... pending
            const auto& exit = exits[j];     // pending ... y
            std::vector<VertexId> seq = entry;
            seq.insert(seq.end(), exit.begin() + 1, exit.end());
            std::vector<Arc> arcs;
            for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
              arcs.push_back(Arc{seq[k], seq[k + 1]});
            }
            // Entry and exit may overlap in arcs or reuse arcs of the host
            // trail; such pairs are not splice candidates.
            std::vector<Arc> sorted = arcs;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
            bool overlap = false;
            for (const Arc& a : arcs) {
              if (q.uses_arc(a)) {
                overlap = true;
                break;
              }
            }
            if (overlap) continue;
            Ditrail t(std::move(arcs));
            VertexId x = entry.front(), y = exit.back();
            Ditrail next = splice(q, t, x, y);
            if (coverage(next, state.target()) <= state.covered_count()) continue;
            std::string params = "s=" + std::to_string(pending) + " x=" + std::to_string(x) +
                                 " y=" + std::to_string(y) +
                                 " path=" + join(seq);
            if (trunc_out || trunc_in) params += " enumeration=truncated";
            state.accept(std::move(next), "external-path", params);
            return {true, ""};
          }
        }
      }
    }
  }
  return {false, "no coverage-growing splice found"};
}

MoveOutcome bridge_components(AugmentationState& state, std::span<const VertexId> comp_a,
                              std::span<const VertexId> comp_b) {
  const Digraph& d = state.digraph();
  const Ditrail& q = state.trail();
  if (comp_a.size() < 2 || comp_b.size() < 2) {
    throw PreconditionError("bridge_components: components need at least one matched pair");
  }
  for (const auto& comp : {comp_a, comp_b}) {
    for (VertexId u : comp) {
      for (VertexId v : comp) {
        if (u != v && !d.has_arc(u, v)) {
          return {false, "component does not induce a complete digraph"};
        }
      }
    }
  }

  std::vector<int> label(static_cast<std::size_t>(d.order()), 0);
  for (VertexId v : comp_a) label[static_cast<std::size_t>(v)] = 1;
  for (VertexId v : comp_b) label[static_cast<std::size_t>(v)] = 2;

  std::vector<VertexId> seq = q.vertex_sequence();
  seq.pop_back();  // cyclic positions
  const std::size_t len = seq.size();
  auto lab = [&](std::size_t pos) { return label[static_cast<std::size_t>(seq[pos % len])]; };

  bool visits_a = false, visits_b = false;
  for (std::size_t i = 0; i < len; ++i) {
    visits_a |= lab(i) == 1;
    visits_b |= lab(i) == 2;
  }
  if (!visits_a || !visits_b) return {false, "trail does not visit both components"};

  // First A->B crossing segment with no component vertex inside, then the
  // B->A return segment after it.
  SplitPlan plan;
  bool have_plan = false;
  for (std::size_t i = 0; i < len && !have_plan; ++i) {
    if (lab(i) != 1) continue;
    for (std::size_t k = i + 1; k < i + len; ++k) {
      int l = lab(k);
      if (l == 1) break;  // re-entered A first: not a crossing start
      if (l == 2) {
        plan.enter_a = i % len;
        plan.leave_a = k % len;
        have_plan = true;
        break;
      }
    }
  }
  if (!have_plan) return {false, "no crossing from first component to the second"};
  // Walk on from leave_a to the next A vertex; the last B vertex before it
  // starts the return crossing.
  std::size_t ret_start = plan.leave_a, ret_end = plan.leave_a;
  bool have_return = false;
  for (std::size_t k = plan.leave_a; k < plan.leave_a + len; ++k) {
    int l = lab(k);
    if (l == 2) ret_start = k % len;
    if (l == 1) {
      ret_end = k % len;
      have_return = true;
      break;
    }
  }
  if (!have_return) return {false, "no crossing back to the first component"};
  plan.enter_b = ret_start;
  plan.leave_b = ret_end;

  auto segment = [&](std::size_t from, std::size_t to) {
    std::vector<Arc> arcs;
    for (std::size_t k = from; k % len != to; ++k) {
      arcs.push_back(Arc{seq[k % len], seq[(k + 1) % len]});
    }
    return arcs;
  };
  auto spanning = [&](std::span<const VertexId> comp, VertexId from, VertexId to) {
    // Hamiltonian dipath (or dicycle when from == to) inside a complete
    // component, remaining vertices in ascending order.
    std::vector<VertexId> mid;
    for (VertexId v : comp) {
      if (v != from && v != to) mid.push_back(v);
    }
    std::sort(mid.begin(), mid.end());
    std::vector<VertexId> vs = {from};
    vs.insert(vs.end(), mid.begin(), mid.end());
    vs.push_back(to);
    std::vector<Arc> arcs;
    for (std::size_t k = 0; k + 1 < vs.size(); ++k) arcs.push_back(Arc{vs[k], vs[k + 1]});
    return arcs;
  };

  VertexId x_h = seq[plan.enter_a], x_hp = seq[plan.leave_a];
  VertexId x_lp = seq[plan.enter_b], x_l = seq[plan.leave_b];

  std::vector<Arc> arcs = segment(plan.enter_a, plan.leave_a);
  auto span_b = spanning(comp_b, x_hp, x_lp);
  arcs.insert(arcs.end(), span_b.begin(), span_b.end());
  auto back = segment(plan.enter_b, plan.leave_b);
  arcs.insert(arcs.end(), back.begin(), back.end());
  auto span_a = spanning(comp_a, x_l, x_h);
  arcs.insert(arcs.end(), span_a.begin(), span_a.end());

  Ditrail next(std::move(arcs));
  std::string params = "enter=" + std::to_string(x_h) + " leave=" + std::to_string(x_hp) +
                       " return=" + std::to_string(x_lp) + " close=" + std::to_string(x_l);
  state.accept(std::move(next), "bridge-components", params);
  return {true, ""};
}

ConstructResult construct(const Digraph& d, std::span<const VertexId> s, SearchBudget budget) {
  std::vector<VertexId> target = checked_target(d, s);
  ConstructResult result;

  std::optional<Ditrail> seed = initial_trail(d, target);
  if (!seed) {
    // No target vertex lies on any dicycle, hence on any closed ditrail.
    result.status = ConstructStatus::impossible;
    result.moves.push_back(MoveRecord{"initial", "no seed dicycle through the target", 0});
    return result;
  }
  AugmentationState state(d, target, std::move(*seed));
  state.record("initial", "seed=" + join(state.trail().vertex_set()));

  while (!state.complete()) {
    bool moved = false;
    for (VertexId x : state.pending()) {
      for (VertexId w : state.trail().vertex_set()) {
        if (absorb_two_cycle(state, x, w).accepted) {
          moved = true;
          break;
        }
      }
      if (moved) break;
    }
    if (moved) continue;

    for (VertexId x : state.pending()) {
      if (augment_via_external_path(state, x).accepted) {
        moved = true;
        break;
      }
    }
    if (moved) continue;

    // Split structure of the target's induced subdigraph, when present.
    InducedSubdigraph sub = induced(d, target);
    Matching m = maximum_matching(underlying_graph(sub.graph));
    if (m.size() > 0 && split_case_triggered(sub.graph, m) &&
        min_semi_degree(sub.graph) >= static_cast<int>(m.size())) {
      MatchingStructure structure = analyze_matching_structure(sub.graph, m);
      if (structure.is_split()) {
        auto globalize = [&](const std::vector<VertexId>& local) {
          std::vector<VertexId> out;
          out.reserve(local.size());
          for (VertexId v : local) out.push_back(sub.to_original(v));
          std::sort(out.begin(), out.end());
          return out;
        };
        std::vector<VertexId> comp_a = globalize(structure.split->comp_a);
        std::vector<VertexId> comp_b = globalize(structure.split->comp_b);
        if (bridge_components(state, comp_a, comp_b).accepted) continue;
      }
    }

    // Stall: the proofs' moves are not a complete algorithm; decide exactly.
    OracleResult oracle = closed_ditrail_through(d, target, budget);
    result.expansions += oracle.expansions;
    result.used_fallback = true;
    if (oracle.found()) {
      state.accept(std::move(*oracle.witness), "oracle-fallback", "");
      break;
    }
    result.moves = state.moves();
    result.moves.push_back(MoveRecord{"oracle-fallback",
                                      oracle.status == SearchStatus::none ? "none" : "budget",
                                      state.trail().length()});
    result.status = oracle.status == SearchStatus::none ? ConstructStatus::impossible
                                                        : ConstructStatus::inconclusive;
    return result;
  }

  if (!validate_trail(d, state.trail(), /*require_closed=*/true)) {
    throw ContractViolation("construct: final trail failed validation");
  }
  for (VertexId v : target) {
    if (!state.trail().visits(v)) {
      throw ContractViolation("construct: final trail misses a target vertex");
    }
  }
  result.status = ConstructStatus::success;
  result.trail = state.trail();
  result.moves = state.moves();
  return result;
}

}  // namespace ditrail
