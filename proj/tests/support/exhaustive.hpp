#pragma once

// Test-side brute-force oracles, kept independent of the library's search
// code: they decide by definition-level enumeration only.

#include <optional>
#include <random>
#include <span>
#include <vector>

#include "ditrail/digraph.hpp"

namespace ditrail::testing {

/// Maximum matching size by branching on the first undecided vertex.
int exhaustive_matching_number(const UndirectedGraph& g);

/// Minimum number of arcs whose removal destroys strongness (0 when the
/// digraph is not strong), by subset enumeration. Requires |A| <= ~16.
int exhaustive_lambda(const Digraph& d);

/// Existence of a nonempty balanced arc subset, connected in the underlying
/// sense, whose incident vertices cover W. Enumerates all 2^|A| subsets.
bool exhaustive_balanced_cover(const Digraph& d, std::span<const VertexId> w);

/// Any circuit using every given arc exactly once from `start`, by
/// brute-force sequencing.
std::optional<std::vector<Arc>> exhaustive_euler_circuit(std::span<const Arc> arcs,
                                                         VertexId start);

/// Seeded random digraph with exactly `arc_count` arcs (or all, if fewer
/// ordered pairs exist). Deterministic Fisher-Yates on the pair list.
Digraph random_test_digraph(std::mt19937_64& rng, VertexId n, std::size_t arc_count);

/// Random nonempty subset of [0, n) of the given size.
std::vector<VertexId> random_vertex_subset(std::mt19937_64& rng, VertexId n, VertexId size);

}  // namespace ditrail::testing
