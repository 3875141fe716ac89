#pragma once

#include <span>
#include <vector>

#include "ditrail/digraph.hpp"

namespace ditrail {

/// Partition of the vertices into maximal strongly connected components.
/// Components are numbered by their smallest member vertex, ascending.
struct SccDecomposition {
  std::vector<int> component_of;
  int component_count = 0;
};

SccDecomposition strong_components(const Digraph& d);

/// n >= 1 and every vertex in one component.
bool is_strong(const Digraph& d);

/// True iff all of S lies in a single strong component, i.e. every ordered
/// pair of S-vertices is joined by a dipath. S must be nonempty.
bool is_s_strong(const Digraph& d, std::span<const VertexId> s);

/// Arc-strong connectivity: the minimum over ordered vertex pairs of the
/// maximum number of arc-disjoint dipaths (unit-capacity max-flow). Zero
/// iff the digraph is not strong. Requires n >= 2.
int arc_strong_connectivity(const Digraph& d);

/// Max number of arc-disjoint (s,t)-dipaths; building block for the above,
/// exposed for tests.
int arc_disjoint_path_count(const Digraph& d, VertexId s, VertexId t);

/// Arc-strong connectivity together with a minimum arc cut: source_side
/// marks the residual-reachable side of a binding (s,t) pair, so adding any
/// missing source-to-sink arc raises that pair's flow.
struct LambdaCut {
  int lambda = 0;
  VertexId s = 0, t = 0;
  std::vector<char> source_side;
};

LambdaCut arc_strong_connectivity_with_cut(const Digraph& d);

}  // namespace ditrail
