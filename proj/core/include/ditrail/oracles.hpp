#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "ditrail/trail.hpp"

namespace ditrail {

/// NP-hard searches run under an expansion cap so that exceeding the desk
/// scale yields a distinguished outcome, never a wrong boolean.
inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

struct SearchBudget {
  std::uint64_t max_expansions = kDefaultBudget;
};

enum class SearchStatus {
  found,             ///< witness produced
  none,              ///< exhaustive search proved nonexistence
  budget_exhausted,  ///< undecided within the expansion cap
};

struct OracleResult {
  SearchStatus status = SearchStatus::none;
  std::optional<Ditrail> witness;
  std::uint64_t expansions = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Exact decision: does D contain a closed ditrail through every vertex of
/// W? DFS over arc sequences rooted at the smallest W-vertex, arcs tried in
/// (tail, head) order, pruned on arc reuse and on reachability of uncovered
/// W-vertices, with memoized failed (used-arcs, position) states.
OracleResult closed_ditrail_through(const Digraph& d, std::span<const VertexId> w,
                                    SearchBudget budget = {});

/// Independent route to the same decision: enumerate arc subsets that are
/// balanced, connected, and cover W, then extract the Euler circuit.
/// Exponential in |A|; intended for cross-validation at small sizes.
OracleResult closed_ditrail_through_subsets(const Digraph& d, std::span<const VertexId> w,
                                            SearchBudget budget = {});

/// closed_ditrail_through(D, S) produced a witness. For |S| = 1 this means
/// "lies on some closed ditrail".
OracleResult is_closed_trailable(const Digraph& d, std::span<const VertexId> s,
                                 SearchBudget budget = {});

/// Spanning closed ditrail, i.e. is_closed_trailable with S = V(D).
OracleResult is_supereulerian(const Digraph& d, SearchBudget budget = {});

/// Exact search for a simple dicycle (pairwise-distinct vertices) through
/// all of S.
OracleResult dicycle_through(const Digraph& d, std::span<const VertexId> s,
                             SearchBudget budget = {});

struct StrictStrongResult {
  SearchStatus status = SearchStatus::none;
  std::optional<std::pair<VertexId, VertexId>> witness_pair;
  std::optional<Ditrail> witness;
  std::uint64_t expansions = 0;

  bool found() const { return status == SearchStatus::found; }
};

/// Some nonadjacent pair u, v in S lies on a common closed ditrail. Pairs
/// are tried in lexicographic order; the first witness is returned.
StrictStrongResult is_s_strictly_strong(const Digraph& d, std::span<const VertexId> s,
                                        SearchBudget budget = {});

/// Exact search for a (from,to)-ditrail whose vertex set is exactly `vset`
/// (arcs restricted to D<vset>, every vset vertex visited).
OracleResult ditrail_with_vertex_set(const Digraph& d, VertexId from, VertexId to,
                                     std::span<const VertexId> vset,
                                     SearchBudget budget = {});

/// Degree-bound property of trails: whenever no (initial,terminal)-ditrail
/// with vertex set V(T) + {x} exists (decided exactly), the degree of x
/// toward V(T) is at most |V(T)|. Throws ContractViolation if the premise
/// cannot be decided within the budget.
bool trail_degree_bound_holds(const Digraph& d, const Ditrail& t, VertexId x,
                              SearchBudget budget = {});

}  // namespace ditrail
