#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace ditrail {

/// Dense zero-based vertex index. Named inputs are mapped to indices at
/// parse time; all algorithms work on indices only.
using VertexId = std::int32_t;

/// Directed arc (tail, head). Strict digraphs forbid tail == head.
struct Arc {
  VertexId tail = 0;
  VertexId head = 0;

  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Undirected edge with endpoints stored in sorted order.
struct Edge {
  VertexId a = 0;
  VertexId b = 0;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {}

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices [0, n).
class UndirectedGraph {
 public:
  UndirectedGraph() = default;
  /// Throws InputError on loops, duplicate edges, or out-of-range endpoints.
  UndirectedGraph(VertexId n, std::vector<Edge> edges);

  VertexId order() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;
  int degree(VertexId v) const;

 private:
  VertexId n_ = 0;
  std::vector<Edge> edges_;                 // sorted, unique
  std::vector<std::vector<VertexId>> adj_;  // sorted neighbor lists
};

/// Strict digraph: no loops, no duplicate arcs; the opposite pair
/// (u,v),(v,u) may both be present. Immutable after construction.
class Digraph {
 public:
  Digraph() = default;
  /// Throws InputError on loops, duplicates, or out-of-range endpoints.
  Digraph(VertexId n, std::vector<Arc> arcs);

  VertexId order() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  std::span<const Arc> arcs() const { return arcs_; }

  bool has_arc(VertexId u, VertexId v) const;
  const std::vector<VertexId>& out_neighbors(VertexId v) const;
  const std::vector<VertexId>& in_neighbors(VertexId v) const;

  int out_degree(VertexId v) const;
  int in_degree(VertexId v) const;
  int degree(VertexId v) const { return out_degree(v) + in_degree(v); }

  friend bool operator==(const Digraph&, const Digraph&) = default;

 private:
  void check_vertex(VertexId v) const;

  VertexId n_ = 0;
  std::vector<Arc> arcs_;                   // sorted, unique
  std::vector<std::vector<VertexId>> out_;  // sorted
  std::vector<std::vector<VertexId>> in_;   // sorted
};

struct DegreeProfile {
  int in = 0;
  int out = 0;
  int total = 0;

  friend bool operator==(const DegreeProfile&, const DegreeProfile&) = default;
};

/// In-, out-, and total degree of v in D.
DegreeProfile degree_profile(const Digraph& d, VertexId v);

/// Degrees of v counted toward the vertex set `inside` only, using arcs of
/// D; v itself never counts. Used for d_T(x), d_W(s) style quantities where
/// only the vertex set of the subobject matters.
DegreeProfile restricted_degree(const Digraph& d, VertexId v,
                                std::span<const VertexId> inside);

/// Same, toward the vertices incident to an arc subdigraph: neighbors are
/// still counted over the arcs of D, as the subdigraph only contributes its
/// vertex set.
DegreeProfile restricted_degree_arcs(const Digraph& d, VertexId v,
                                     std::span<const Arc> subdigraph);

/// min over vertices of min(in-degree, out-degree). Throws on empty digraph.
int min_semi_degree(const Digraph& d);

/// Induced subdigraph with vertices reindexed to [0, |X|). `original[i]`
/// is the input-digraph vertex behind new index i, so witnesses found in
/// the subdigraph can be translated back.
struct InducedSubdigraph {
  Digraph graph;
  std::vector<VertexId> original;  // new index -> original vertex

  VertexId to_original(VertexId local) const { return original.at(local); }
  /// -1 when v is not part of the subdigraph.
  VertexId to_local(VertexId v) const;
};

/// D<X>: arcs with both ends in X. X must be duplicate-free and in range.
InducedSubdigraph induced(const Digraph& d, std::span<const VertexId> x);

/// D<A'>: vertices incident to A', arcs exactly A'. A' must be a subset of
/// the arcs of D.
InducedSubdigraph arc_induced(const Digraph& d, std::span<const Arc> arcs);

/// Arc-set union over a common vertex universe of size max(n1, n2).
Digraph union_of(const Digraph& d1, const Digraph& d2);

/// Edge {u,v} present iff (u,v) or (v,u) is an arc.
UndirectedGraph underlying_graph(const Digraph& d);

/// True iff some arc joins u and v (either orientation). u == v is an error.
bool are_adjacent(const Digraph& d, VertexId u, VertexId v);

/// Every pair of distinct vertices adjacent.
bool is_semicomplete(const Digraph& d);

/// K*_n: all n(n-1) arcs.
Digraph complete_digraph(VertexId n);

std::string to_string(const Arc& a);

}  // namespace ditrail
