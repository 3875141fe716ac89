#pragma once

#include <span>

#include "ditrail/digraph.hpp"
#include "ditrail/matching.hpp"
#include "ditrail/trail.hpp"

namespace ditrail {

/// Minimal re-verification of solver outputs straight from the definitions.
/// Shares the core value types with the solvers but none of their search or
/// bookkeeping code; false is the only failure signal.

/// Consecutive arcs of the sequence exist in D, are pairwise distinct, and
/// chain head-to-tail. `require_closed` additionally demands terminal ==
/// initial and length >= 2.
bool validate_trail(const Digraph& d, const Ditrail& t, bool require_closed = false);

/// Same checks on a raw vertex sequence v0 v1 ... vk (as deserialized from
/// a report), plus an expected arc count.
bool validate_trail_sequence(const Digraph& d, std::span<const VertexId> seq,
                             std::size_t arc_count, bool require_closed);

/// Edges belong to G and are pairwise vertex-disjoint.
bool validate_matching(const UndirectedGraph& g, const Matching& m);

/// A closed-ditrail certificate for S: valid closed trail of D whose vertex
/// set contains S.
bool validate_certificate(const Digraph& d, std::span<const VertexId> s,
                          std::span<const VertexId> trail_seq, std::size_t arc_count);

}  // namespace ditrail
