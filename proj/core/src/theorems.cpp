#include "ditrail/theorems.hpp"

#include <algorithm>

#include "ditrail/connectivity.hpp"
#include "ditrail/errors.hpp"
#include "ditrail/io.hpp"
#include "ditrail/matching.hpp"
#include "ditrail/validator.hpp"

namespace ditrail {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::degree_sum:
      return "degree-sum";
    case TheoremId::cyclability:
      return "cyclability";
    case TheoremId::supereulerian_degree:
      return "supereulerian-degree";
    case TheoremId::supereulerian_lambda:
      return "lambda-matching";
    case TheoremId::semidegree_matching:
      return "semidegree-matching";
    case TheoremId::semidegree_matching_refined:
      return "semidegree-matching-refined";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(std::string_view name) {
  for (TheoremId id :
       {TheoremId::degree_sum, TheoremId::cyclability, TheoremId::supereulerian_degree,
        TheoremId::supereulerian_lambda, TheoremId::semidegree_matching,
        TheoremId::semidegree_matching_refined}) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

namespace {

std::vector<VertexId> checked_set(const Digraph& d, std::span<const VertexId> s,
                                  const char* who) {
  if (s.empty()) throw InputError(std::string(who) + ": empty S");
  std::vector<VertexId> out(s.begin(), s.end());
  for (VertexId v : out) {
    if (v < 0 || v >= d.order()) {
      throw InputError(std::string(who) + ": S vertex " + std::to_string(v) + " out of range");
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> all_vertices(const Digraph& d) {
  std::vector<VertexId> vs(static_cast<std::size_t>(d.order()));
  for (VertexId v = 0; v < d.order(); ++v) vs[static_cast<std::size_t>(v)] = v;
  return vs;
}

// Quantifies over nonadjacent pairs of S against a degree-sum threshold.
HypothesisReport degree_sum_report(const Digraph& d, std::span<const VertexId> s,
                                   TheoremId theorem, int threshold) {
  std::vector<VertexId> ss = checked_set(d, s, "degree_sum_report");
  HypothesisReport report;
  report.theorem = theorem;
  report.diagnostics.threshold = threshold;
  bool s_strong = is_s_strong(d, ss);
  if (ss.size() == 1 && s_strong) {
    // A singleton set is vacuously S-strong, which certifies nothing: the
    // conclusion needs the vertex on a dicycle, i.e. a nontrivial strong
    // component.
    SccDecomposition scc = strong_components(d);
    int component = scc.component_of[static_cast<std::size_t>(ss[0])];
    int members = 0;
    for (int c : scc.component_of) members += c == component ? 1 : 0;
    s_strong = members >= 2;
    report.diagnostics.notes.push_back(
        "singleton prescribed set: strongness read as a nontrivial strong component");
  }
  report.diagnostics.s_strong = s_strong;

  bool any_pair = false;
  int worst = 0;
  std::pair<VertexId, VertexId> worst_pair{};
  for (std::size_t i = 0; i < ss.size(); ++i) {
    for (std::size_t j = i + 1; j < ss.size(); ++j) {
      if (are_adjacent(d, ss[i], ss[j])) continue;
      int sum = d.degree(ss[i]) + d.degree(ss[j]);
      if (!any_pair || sum < worst) {
        worst = sum;
        worst_pair = {ss[i], ss[j]};
      }
      any_pair = true;
    }
  }
  report.diagnostics.semicomplete_pairs = !any_pair;
  if (any_pair) {
    report.diagnostics.worst_pair = worst_pair;
    report.diagnostics.worst_degree_sum = worst;
  }
  report.holds = *report.diagnostics.s_strong && (!any_pair || worst >= threshold);
  return report;
}

}  // namespace

HypothesisReport check_degree_sum_closed_trailable(const Digraph& d,
                                                   std::span<const VertexId> s) {
  return degree_sum_report(d, s, TheoremId::degree_sum, 2 * d.order() - 3);
}

HypothesisReport check_cyclability(const Digraph& d, std::span<const VertexId> s) {
  return degree_sum_report(d, s, TheoremId::cyclability, 2 * d.order() - 1);
}

HypothesisReport check_supereulerian_degree(const Digraph& d) {
  if (d.order() < 2) throw InputError("check_supereulerian_degree: need n >= 2");
  return degree_sum_report(d, all_vertices(d), TheoremId::supereulerian_degree,
                           2 * d.order() - 3);
}

HypothesisReport check_supereulerian_lambda(const Digraph& d) {
  if (d.order() < 2) throw InputError("check_supereulerian_lambda: need n >= 2");
  HypothesisReport report;
  report.theorem = TheoremId::supereulerian_lambda;
  bool strong = is_strong(d);
  report.diagnostics.s_strong = strong;
  int lambda = arc_strong_connectivity(d);
  int alpha = matching_number(underlying_graph(d));
  report.diagnostics.lambda = lambda;
  report.diagnostics.matching_number = alpha;
  report.holds = strong && lambda >= alpha;
  return report;
}

SemidegreeVerdicts check_semidegree_matching(const Digraph& d, std::span<const VertexId> s,
                                             SearchBudget budget) {
  std::vector<VertexId> ss = checked_set(d, s, "check_semidegree_matching");
  InducedSubdigraph sub = induced(d, ss);
  const Digraph& h = sub.graph;

  Matching m = maximum_matching(underlying_graph(h));
  int alpha = static_cast<int>(m.size());
  int semi = h.order() > 0 ? min_semi_degree(h) : 0;

  SemidegreeVerdicts verdicts;
  for (HypothesisReport* r : {&verdicts.baseline, &verdicts.refined}) {
    r->diagnostics.matching_number = alpha;
    r->diagnostics.min_semi_degree = semi;
  }
  verdicts.baseline.theorem = TheoremId::semidegree_matching;
  verdicts.refined.theorem = TheoremId::semidegree_matching_refined;

  bool degree_ok = alpha > 0 && semi >= alpha;
  if (!degree_ok) {
    verdicts.baseline.holds = false;
    verdicts.refined.holds = false;
    return verdicts;
  }

  bool split = split_case_triggered(h, m);
  verdicts.baseline.diagnostics.split_case = split;
  verdicts.refined.diagnostics.split_case = split;

  // alpha' > 0 implies |S| >= 2, so the strict-strong query is well-posed.
  StrictStrongResult strict = is_s_strictly_strong(d, ss, budget);
  bool strict_known = strict.status != SearchStatus::budget_exhausted;
  for (HypothesisReport* r : {&verdicts.baseline, &verdicts.refined}) {
    if (strict_known) {
      r->diagnostics.s_strictly_strong = strict.found();
    } else {
      r->diagnostics.strict_strong_inconclusive = true;
    }
    if (strict.found()) r->diagnostics.strict_witness_pair = strict.witness_pair;
  }

  verdicts.baseline.holds = strict.found();
  verdicts.refined.holds = !split || strict.found();
  if (!strict_known) {
    // Cannot certify a hypothesis that may still require the failed query.
    verdicts.baseline.holds = false;
    if (split) verdicts.refined.holds = false;
  }
  return verdicts;
}

VerifyOutcome verify_certificate(const Digraph& d, std::span<const VertexId> s,
                                 const HypothesisReport& report, SearchBudget budget) {
  if (!report.holds) throw InputError("verify_certificate: report does not hold");

  bool spanning = report.theorem == TheoremId::supereulerian_degree ||
                  report.theorem == TheoremId::supereulerian_lambda;
  std::vector<VertexId> target =
      spanning ? all_vertices(d) : checked_set(d, s, "verify_certificate");

  OracleResult r = report.theorem == TheoremId::cyclability
                       ? dicycle_through(d, target, budget)
                       : closed_ditrail_through(d, target, budget);
  VerifyOutcome out;
  out.expansions = r.expansions;
  if (r.found()) {
    Certificate cert{report.theorem, digraph_sha256(d), target, std::move(*r.witness)};
    if (!validate_certificate(d, cert.s, cert.witness.vertex_sequence(),
                              cert.witness.length())) {
      throw ContractViolation("verify_certificate: oracle witness failed validation");
    }
    out.status = VerifyStatus::certified;
    out.certificate = std::move(cert);
  } else if (r.status == SearchStatus::none) {
    out.status = VerifyStatus::theorem_violation;
  } else {
    out.status = VerifyStatus::inconclusive;
  }
  return out;
}

}  // namespace ditrail
