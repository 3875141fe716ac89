#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ditrail/digraph.hpp"
#include "ditrail/oracles.hpp"

namespace ditrail {

/// The sufficient conditions the workbench can check. The first four
/// conclude with a closed ditrail (or dicycle) through S; the supereulerian
/// pair is the S = V(D) specialization with a strongness requirement.
enum class TheoremId {
  degree_sum,                   // S-strong + nonadjacent S-degree sums >= 2n-3
  cyclability,                  // S-strong + nonadjacent S-degree sums >= 2n-1
  supereulerian_degree,         // strong + nonadjacent degree sums >= 2n-3
  supereulerian_lambda,         // strong + lambda(D) >= alpha'(D)
  semidegree_matching,          // S-strictly-strong + delta^0(D<S>) >= alpha'(D<S>) > 0
  semidegree_matching_refined,  // strict-strongness required only in the split case
};

std::string_view to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(std::string_view name);

/// Everything needed to re-derive a verdict by hand.
struct Diagnostics {
  std::optional<bool> s_strong;
  std::optional<bool> semicomplete_pairs;  // no nonadjacent pair to quantify over
  std::optional<std::pair<VertexId, VertexId>> worst_pair;
  std::optional<int> worst_degree_sum;
  std::optional<int> threshold;
  std::optional<int> min_semi_degree;
  std::optional<int> matching_number;
  std::optional<int> lambda;
  std::optional<bool> split_case;
  std::optional<bool> s_strictly_strong;
  bool strict_strong_inconclusive = false;
  std::optional<std::pair<VertexId, VertexId>> strict_witness_pair;
  std::vector<std::string> notes;
};

struct HypothesisReport {
  TheoremId theorem = TheoremId::degree_sum;
  bool holds = false;
  Diagnostics diagnostics;
};

/// Degree-sum condition for a closed ditrail through S: S-strong and every
/// nonadjacent pair of S-vertices has degree sum >= 2n-3, n = |V(D)|.
HypothesisReport check_degree_sum_closed_trailable(const Digraph& d,
                                                   std::span<const VertexId> s);

/// Same quantification at threshold 2n-1; concludes a simple dicycle.
HypothesisReport check_cyclability(const Digraph& d, std::span<const VertexId> s);

/// S = V(D) specializations (n >= 2).
HypothesisReport check_supereulerian_degree(const Digraph& d);
HypothesisReport check_supereulerian_lambda(const Digraph& d);

struct SemidegreeVerdicts {
  HypothesisReport baseline;  // strict-strongness required unconditionally
  HypothesisReport refined;   // strict-strongness required only in the split case
};

/// Minimum-semi-degree vs matching-number condition on D<S>, in both
/// strengths. Needs oracle queries for strict-strongness, hence the budget.
SemidegreeVerdicts check_semidegree_matching(const Digraph& d, std::span<const VertexId> s,
                                             SearchBudget budget = {});

/// A hypothesis verdict tied to an oracle-confirmed witness.
struct Certificate {
  TheoremId theorem = TheoremId::degree_sum;
  std::string digraph_sha256;
  std::vector<VertexId> s;
  Ditrail witness;
};

enum class VerifyStatus {
  certified,          ///< witness found and validated
  theorem_violation,  ///< hypotheses hold but the exact oracle proved no witness exists
  inconclusive,       ///< search budget exhausted
};

struct VerifyOutcome {
  VerifyStatus status = VerifyStatus::inconclusive;
  std::optional<Certificate> certificate;
  std::uint64_t expansions = 0;
};

/// Runs the exact oracle behind a holding report. A `theorem_violation`
/// outcome carries the full instance implicitly and is the highest-severity
/// result the workbench can produce. Throws InputError when report.holds is
/// false.
VerifyOutcome verify_certificate(const Digraph& d, std::span<const VertexId> s,
                                 const HypothesisReport& report, SearchBudget budget = {});

}  // namespace ditrail
