#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ditrail/digraph.hpp"

namespace ditrail {

/// Set of pairwise vertex-disjoint edges.
struct Matching {
  std::vector<Edge> edges;  // sorted

  std::size_t size() const { return edges.size(); }
  bool covers(VertexId v) const;
  /// V(M), ascending.
  std::vector<VertexId> covered_vertices() const;
};

/// Maximum-cardinality matching via Edmonds' blossom algorithm.
Matching maximum_matching(const UndirectedGraph& g);

/// An M-augmenting path (alternating, both endpoints unmatched) as a vertex
/// sequence, or nullopt iff M is maximum. Throws InputError when M is not a
/// matching of G.
std::optional<std::vector<VertexId>> find_augmenting_path(const UndirectedGraph& g,
                                                          const Matching& m);

/// Flips the matching along an augmenting path, growing it by one edge.
Matching augment_along(const Matching& m, std::span<const VertexId> path);

/// alpha'(G).
int matching_number(const UndirectedGraph& g);

/// alpha'(D<S>), the matching number of the underlying graph of the
/// subdigraph induced by S.
int matching_number_digraph(const Digraph& d, std::span<const VertexId> s);

/// Lexicographically smallest arc of H realizing the matched pair.
Arc witness_arc(const Digraph& h, const Edge& e);

/// Degree-forcing check on an induced subdigraph H with matching M and
/// unmatched set X = V(H) - V(M) (|X| >= 2, every X-degree >= 2|M|-1):
/// if some unmatched vertex has degree >= 2|M|+1, an augmenting path must
/// exist; returns whether it did (vacuously true when no vertex reaches the
/// threshold). Throws PreconditionError when the hypotheses do not hold.
bool degree_forces_augmenting_path(const Digraph& h, const Matching& m,
                                   std::span<const VertexId> x);

/// Structure of a maximum matching of H under the semi-degree floor
/// delta^0(H) >= |M| with at least two unmatched vertices: either the vertex
/// set splits into two complete components of order |M|+1 with no arcs
/// between them, or every matched pair e has one endpoint doubly joined to
/// every unmatched vertex (x_adjacent) and one with no unmatched neighbor at
/// all (x_avoiding), the x_avoiding vertices forming an independent set
/// doubly joined to every x_adjacent vertex.
struct MatchingStructure {
  std::vector<VertexId> unmatched;  // X, ascending

  struct PairLabel {
    Edge e;
    VertexId x_adjacent;  // doubly adjacent to all of X
    VertexId x_avoiding;  // no neighbor in X
  };
  std::vector<PairLabel> labels;          // general case only
  std::vector<VertexId> independent_set;  // {x_avoiding}, ascending

  struct SplitComponents {
    VertexId x_a, x_b;
    std::vector<VertexId> comp_a, comp_b;  // each induces a complete digraph
  };
  std::optional<SplitComponents> split;

  bool is_split() const { return split.has_value(); }
};

/// Verifies the structure above by direct arc inspection. Throws
/// PreconditionError when the hypotheses fail and LemmaViolation when a
/// structural guarantee fails under valid hypotheses (a solver bug or a
/// genuine counterexample; never repaired silently).
MatchingStructure analyze_matching_structure(const Digraph& h, const Matching& m);

/// True iff exactly two vertices of H are unmatched and one of them touches
/// exactly half of the matched pairs, the trigger for the split structure
/// above. False for empty matchings.
bool split_case_triggered(const Digraph& h, const Matching& m);

}  // namespace ditrail
