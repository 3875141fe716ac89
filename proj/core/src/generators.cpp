#include "ditrail/generators.hpp"

#include <algorithm>
#include <random>

#include "ditrail/connectivity.hpp"
#include "ditrail/errors.hpp"
#include "ditrail/matching.hpp"

namespace ditrail {

namespace {

// mt19937_64 is fully specified by the standard; the derived draws below
// avoid std distributions, whose outputs are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  std::vector<VertexId> sample(VertexId n, VertexId k) {
    std::vector<VertexId> pool(static_cast<std::size_t>(n));
    for (VertexId v = 0; v < n; ++v) pool[static_cast<std::size_t>(v)] = v;
    for (VertexId i = 0; i < k; ++i) {
      int j = i + below(n - i);
      std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<VertexId> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t instance_seed(std::uint64_t base, std::uint64_t index) {
  return base ^ (0x9e3779b97f4a7c15ULL * (index + 1));
}

Digraph random_digraph_rng(VertexId n, double p, Rng& rng) {
  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v && rng.unit() < p) arcs.push_back(Arc{u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

Digraph with_arc(const Digraph& d, Arc a) {
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  arcs.push_back(a);
  return Digraph(d.order(), std::move(arcs));
}

int nonadjacent_pair_count(const Digraph& d, std::span<const VertexId> s) {
  int count = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (!are_adjacent(d, s[i], s[j])) ++count;
    }
  }
  return count;
}

bool checker_holds(const Digraph& d, const std::vector<VertexId>& s, TheoremId target,
                   SearchBudget budget) {
  switch (target) {
    case TheoremId::degree_sum:
      return check_degree_sum_closed_trailable(d, s).holds;
    case TheoremId::cyclability:
      return check_cyclability(d, s).holds;
    case TheoremId::supereulerian_degree:
      return check_supereulerian_degree(d).holds;
    case TheoremId::supereulerian_lambda:
      return check_supereulerian_lambda(d).holds;
    case TheoremId::semidegree_matching:
      return check_semidegree_matching(d, s, budget).baseline.holds;
    case TheoremId::semidegree_matching_refined:
      return check_semidegree_matching(d, s, budget).refined.holds;
  }
  return false;
}

// One arc-addition step toward the target hypothesis; false when no useful
// repair exists (caller then skips the instance).
bool repair_step(Digraph& d, const std::vector<VertexId>& s, TheoremId target,
                 bool keep_nonadjacent_pair, Rng& rng) {
  auto add_between_worst_pair = [&](const HypothesisReport& report) -> bool {
    if (!report.diagnostics.worst_pair) return false;
    auto [u, v] = *report.diagnostics.worst_pair;
    if (keep_nonadjacent_pair && nonadjacent_pair_count(d, s) <= 1) return false;
    Arc a = rng.below(2) == 0 ? Arc{u, v} : Arc{v, u};
    d = with_arc(d, a);
    return true;
  };
  auto link_components = [&]() -> bool {
    SccDecomposition scc = strong_components(d);
    for (std::size_t i = 0; i < s.size(); ++i) {
      for (std::size_t j = 0; j < s.size(); ++j) {
        if (i == j) continue;
        VertexId u = s[i], v = s[j];
        if (scc.component_of[static_cast<std::size_t>(u)] !=
                scc.component_of[static_cast<std::size_t>(v)] &&
            !d.has_arc(u, v)) {
          d = with_arc(d, Arc{u, v});
          return true;
        }
      }
    }
    return false;
  };

  switch (target) {
    case TheoremId::degree_sum:
    case TheoremId::cyclability: {
      HypothesisReport report = target == TheoremId::degree_sum
                                    ? check_degree_sum_closed_trailable(d, s)
                                    : check_cyclability(d, s);
      if (!*report.diagnostics.s_strong) {
        if (link_components()) return true;
      }
      return add_between_worst_pair(report);
    }
    case TheoremId::supereulerian_degree: {
      std::vector<VertexId> all(static_cast<std::size_t>(d.order()));
      for (VertexId v = 0; v < d.order(); ++v) all[static_cast<std::size_t>(v)] = v;
      HypothesisReport report = check_supereulerian_degree(d);
      if (!*report.diagnostics.s_strong) {
        SccDecomposition scc = strong_components(d);
        for (VertexId u = 0; u < d.order(); ++u) {
          for (VertexId v = 0; v < d.order(); ++v) {
            if (u != v &&
                scc.component_of[static_cast<std::size_t>(u)] !=
                    scc.component_of[static_cast<std::size_t>(v)] &&
                !d.has_arc(u, v)) {
              d = with_arc(d, Arc{u, v});
              return true;
            }
          }
        }
      }
      if (keep_nonadjacent_pair) {
        std::vector<VertexId> all_s(all.begin(), all.end());
        if (nonadjacent_pair_count(d, all_s) <= 1 && report.diagnostics.worst_pair) return false;
      }
      if (!report.diagnostics.worst_pair) return false;
      auto [u, v] = *report.diagnostics.worst_pair;
      d = with_arc(d, rng.below(2) == 0 ? Arc{u, v} : Arc{v, u});
      return true;
    }
    case TheoremId::supereulerian_lambda: {
      LambdaCut cut = arc_strong_connectivity_with_cut(d);
      int alpha = matching_number(underlying_graph(d));
      if (cut.lambda >= alpha && cut.lambda >= 1) return false;  // already fine
      for (VertexId u = 0; u < d.order(); ++u) {
        if (!cut.source_side[static_cast<std::size_t>(u)]) continue;
        for (VertexId v = 0; v < d.order(); ++v) {
          if (cut.source_side[static_cast<std::size_t>(v)] || u == v) continue;
          if (!d.has_arc(u, v)) {
            d = with_arc(d, Arc{u, v});
            return true;
          }
        }
      }
      return false;
    }
    case TheoremId::semidegree_matching:
    case TheoremId::semidegree_matching_refined: {
      InducedSubdigraph sub = induced(d, s);
      const Digraph& h = sub.graph;
      int alpha = matching_number(underlying_graph(h));
      if (alpha == 0) {
        if (s.size() < 2) return false;
        d = with_arc(d, Arc{s[0], s[1]});
        return true;
      }
      int semi = min_semi_degree(h);
      if (semi < alpha) {
        // Raise the worst semi-degree inside D<S>.
        for (VertexId lv = 0; lv < h.order(); ++lv) {
          bool in_short = h.in_degree(lv) < alpha;
          bool out_short = h.out_degree(lv) < alpha;
          if (!in_short && !out_short) continue;
          VertexId gv = sub.to_original(lv);
          for (VertexId lw = 0; lw < h.order(); ++lw) {
            if (lw == lv) continue;
            VertexId gw = sub.to_original(lw);
            if (in_short && !d.has_arc(gw, gv)) {
              d = with_arc(d, Arc{gw, gv});
              return true;
            }
            if (out_short && !d.has_arc(gv, gw)) {
              d = with_arc(d, Arc{gv, gw});
              return true;
            }
          }
        }
        return false;
      }
      // Degree side holds; the missing piece is strict-strongness. Thread a
      // 4-cycle through a nonadjacent pair via vertices outside S.
      std::vector<VertexId> outside;
      for (VertexId v = 0; v < d.order(); ++v) {
        if (!std::binary_search(s.begin(), s.end(), v)) outside.push_back(v);
      }
      if (outside.empty()) return false;
      for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i + 1; j < s.size(); ++j) {
          if (are_adjacent(d, s[i], s[j])) continue;
          VertexId z1 = outside[0];
          VertexId z2 = outside.size() > 1 ? outside[1] : outside[0];
          bool changed = false;
          for (Arc a : {Arc{s[i], z1}, Arc{z1, s[j]}, Arc{s[j], z2}, Arc{z2, s[i]}}) {
            if (!d.has_arc(a.tail, a.head)) {
              d = with_arc(d, a);
              changed = true;
            }
          }
          return changed;
        }
      }
      return false;
    }
  }
  return false;
}

}  // namespace

Digraph random_digraph(const GenSpec& spec) {
  if (spec.n < 1) throw InputError("random_digraph: need n >= 1");
  if (spec.arc_probability < 0.0 || spec.arc_probability > 1.0) {
    throw InputError("random_digraph: arc probability outside [0, 1]");
  }
  Rng rng(spec.seed);
  return random_digraph_rng(spec.n, spec.arc_probability, rng);
}

std::vector<GeneratedInstance> sample_satisfying(const GenSpec& spec, std::size_t count,
                                                 SampleStats* stats, SearchBudget budget) {
  if (spec.n < 1) throw InputError("sample_satisfying: need n >= 1");
  if (spec.arc_probability < 0.0 || spec.arc_probability > 1.0) {
    throw InputError("sample_satisfying: arc probability outside [0, 1]");
  }
  if (!spec.target) throw InputError("sample_satisfying: no target hypothesis");
  SampleStats local;
  std::vector<GeneratedInstance> out;
  std::uint64_t index = 0;
  // Bail out once failures dwarf successes; impossible targets must
  // terminate with zero emissions rather than spin forever.
  const std::uint64_t max_attempts = 400 + 600 * static_cast<std::uint64_t>(count);

  while (out.size() < count && local.attempts < max_attempts) {
    ++local.attempts;
    std::uint64_t iseed = instance_seed(spec.seed, index++);
    Rng rng(iseed);
    Digraph d = random_digraph_rng(spec.n, spec.arc_probability, rng);

    // The checkers' conclusions are only guaranteed from two prescribed
    // vertices up; singleton sets are for ad-hoc oracle queries.
    VertexId min_s = std::min<VertexId>(2, spec.n);
    VertexId k = spec.s_size ? *spec.s_size : static_cast<VertexId>(1 + rng.below(spec.n));
    k = std::clamp<VertexId>(k, min_s, spec.n);
    std::vector<VertexId> s =
        (spec.target == TheoremId::supereulerian_degree ||
         spec.target == TheoremId::supereulerian_lambda)
            ? [&] {
                std::vector<VertexId> all(static_cast<std::size_t>(spec.n));
                for (VertexId v = 0; v < spec.n; ++v) all[static_cast<std::size_t>(v)] = v;
                return all;
              }()
            : rng.sample(spec.n, k);

    int repairs = 0;
    bool ok = false;
    for (;;) {
      if (spec.require_nonadjacent_pair && nonadjacent_pair_count(d, s) == 0) break;
      if (checker_holds(d, s, *spec.target, budget)) {
        ok = true;
        break;
      }
      if (repairs >= spec.repair_budget) break;
      if (!repair_step(d, s, *spec.target, spec.require_nonadjacent_pair, rng)) break;
      ++repairs;
    }
    if (ok) {
      ++local.emitted;
      out.push_back(GeneratedInstance{std::move(d), std::move(s), iseed, repairs});
    } else {
      ++local.skipped;
    }
  }
  if (stats) *stats = local;
  return out;
}

GeneratedInstance make_split_instance(int m, std::uint64_t seed) {
  if (m <= 0 || m % 2 != 0) throw InputError("make_split_instance: m must be even and positive");
  const VertexId comp = static_cast<VertexId>(m + 1);
  const VertexId n = 2 * comp + 2;
  Rng rng(seed);

  std::vector<VertexId> relabel(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) relabel[static_cast<std::size_t>(v)] = v;
  for (VertexId i = 0; i < n - 1; ++i) {
    int j = i + rng.below(n - i);
    std::swap(relabel[static_cast<std::size_t>(i)], relabel[static_cast<std::size_t>(j)]);
  }

  std::vector<Arc> arcs;
  auto add_complete = [&](VertexId lo, VertexId hi) {
    for (VertexId u = lo; u < hi; ++u) {
      for (VertexId v = lo; v < hi; ++v) {
        if (u != v) {
          arcs.push_back(Arc{relabel[static_cast<std::size_t>(u)],
                             relabel[static_cast<std::size_t>(v)]});
        }
      }
    }
  };
  add_complete(0, comp);
  add_complete(comp, 2 * comp);

  VertexId x = relabel[0];
  VertexId xp = relabel[static_cast<std::size_t>(comp)];
  VertexId z1 = relabel[static_cast<std::size_t>(2 * comp)];
  VertexId z2 = relabel[static_cast<std::size_t>(2 * comp + 1)];
  arcs.push_back(Arc{x, z1});
  arcs.push_back(Arc{z1, xp});
  arcs.push_back(Arc{xp, z2});
  arcs.push_back(Arc{z2, x});

  std::vector<VertexId> s;
  for (VertexId v = 0; v < 2 * comp; ++v) s.push_back(relabel[static_cast<std::size_t>(v)]);
  std::sort(s.begin(), s.end());
  return GeneratedInstance{Digraph(n, std::move(arcs)), std::move(s), seed, 0};
}

namespace {

std::optional<std::pair<std::pair<VertexId, VertexId>, int>> min_nonadjacent_sum(
    const Digraph& d, std::span<const VertexId> s) {
  std::optional<std::pair<std::pair<VertexId, VertexId>, int>> best;
  for (std::size_t i = 0; i < s.size(); ++i) {
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      if (are_adjacent(d, s[i], s[j])) continue;
      int sum = d.degree(s[i]) + d.degree(s[j]);
      if (!best || sum < best->second) best = {{{s[i], s[j]}, sum}};
    }
  }
  return best;
}

}  // namespace

HuntProbe hunt_tightness_probe(VertexId n_min, VertexId n_max, std::uint64_t seed,
                               std::uint64_t index, SearchBudget oracle_budget) {
  if (n_min < 3 || n_max < n_min) throw InputError("hunt_tightness: bad n range");
  HuntProbe probe;
  std::uint64_t iseed = instance_seed(seed, index);
  Rng rng(iseed);
  VertexId n =
      n_min + static_cast<VertexId>(index % static_cast<std::uint64_t>(n_max - n_min + 1));
  double p = 0.15 + 0.5 * rng.unit();
  Digraph d = random_digraph_rng(n, p, rng);
  VertexId k = static_cast<VertexId>(2 + rng.below(std::max(1, n - 1)));
  std::vector<VertexId> s = rng.sample(n, std::min(k, n));
  const int target = 2 * n - 4;

  // Shape toward the boundary: raise the worst nonadjacent pair's degree
  // sum without merging the pair, then audit exactly.
  for (int step = 0; step < 64; ++step) {
    if (!is_s_strong(d, s)) {
      SccDecomposition scc = strong_components(d);
      bool linked = false;
      for (std::size_t a = 0; a < s.size() && !linked; ++a) {
        for (std::size_t b = 0; b < s.size() && !linked; ++b) {
          if (a == b) continue;
          if (scc.component_of[static_cast<std::size_t>(s[a])] !=
                  scc.component_of[static_cast<std::size_t>(s[b])] &&
              !d.has_arc(s[a], s[b])) {
            d = with_arc(d, Arc{s[a], s[b]});
            linked = true;
          }
        }
      }
      if (!linked) return probe;
      continue;
    }
    auto worst = min_nonadjacent_sum(d, s);
    if (!worst || worst->second >= target) break;
    auto [u, v] = worst->first;
    // Add an arc incident to u that keeps u and v nonadjacent.
    bool raised = false;
    for (VertexId w = 0; w < n && !raised; ++w) {
      if (w == u || w == v) continue;
      if (!d.has_arc(u, w)) {
        d = with_arc(d, Arc{u, w});
        raised = true;
      } else if (!d.has_arc(w, u)) {
        d = with_arc(d, Arc{w, u});
        raised = true;
      }
    }
    if (!raised) break;
  }

  if (!is_s_strong(d, s)) return probe;
  auto worst = min_nonadjacent_sum(d, s);
  if (!worst || worst->second != target) return probe;
  probe.shape_hit = true;

  OracleResult oracle = closed_ditrail_through(d, s, oracle_budget);
  if (oracle.status == SearchStatus::budget_exhausted) {
    probe.oracle_timeout = true;
    return probe;
  }
  if (oracle.status != SearchStatus::none) return probe;

  // Independent re-audit before reporting.
  OracleResult again = closed_ditrail_through(d, s, oracle_budget);
  auto audit = min_nonadjacent_sum(d, s);
  if (again.status == SearchStatus::none && is_s_strong(d, s) && audit &&
      audit->second == target) {
    probe.finding = TightnessFinding{d, s, audit->first, audit->second};
  }
  return probe;
}

HuntReport hunt_tightness(VertexId n_min, VertexId n_max, std::uint64_t instance_budget,
                          std::uint64_t seed, SearchBudget oracle_budget) {
  HuntReport report;
  for (std::uint64_t i = 0; i < instance_budget; ++i) {
    ++report.instances_tried;
    HuntProbe probe = hunt_tightness_probe(n_min, n_max, seed, i, oracle_budget);
    report.shape_hits += probe.shape_hit ? 1 : 0;
    report.oracle_timeouts += probe.oracle_timeout ? 1 : 0;
    if (probe.finding) report.findings.push_back(std::move(*probe.finding));
  }
  return report;
}

}  // namespace ditrail
