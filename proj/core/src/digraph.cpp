#include "ditrail/digraph.hpp"

#include <algorithm>
#include <set>

#include "ditrail/errors.hpp"

namespace ditrail {

namespace {

void check_range(VertexId v, VertexId n, const char* what) {
  if (v < 0 || v >= n) {
    throw InputError(std::string(what) + ": vertex " + std::to_string(v) +
                     " out of range [0, " + std::to_string(n) + ")");
  }
}

}  // namespace

UndirectedGraph::UndirectedGraph(VertexId n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InputError("UndirectedGraph: negative order");
  for (const Edge& e : edges_) {
    check_range(e.a, n_, "UndirectedGraph");
    check_range(e.b, n_, "UndirectedGraph");
    if (e.a == e.b) throw InputError("UndirectedGraph: loop at " + std::to_string(e.a));
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw InputError("UndirectedGraph: duplicate edge");
  }
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (const Edge& e : edges_) {
    adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
    adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

const std::vector<VertexId>& UndirectedGraph::neighbors(VertexId v) const {
  check_range(v, n_, "neighbors");
  return adj_[static_cast<std::size_t>(v)];
}

bool UndirectedGraph::has_edge(VertexId u, VertexId v) const {
  check_range(u, n_, "has_edge");
  check_range(v, n_, "has_edge");
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

int UndirectedGraph::degree(VertexId v) const {
  return static_cast<int>(neighbors(v).size());
}

Digraph::Digraph(VertexId n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
  if (n < 0) throw InputError("Digraph: negative order");
  for (const Arc& a : arcs_) {
    check_range(a.tail, n_, "Digraph");
    check_range(a.head, n_, "Digraph");
    if (a.tail == a.head) throw InputError("Digraph: loop at " + std::to_string(a.tail));
  }
  std::sort(arcs_.begin(), arcs_.end());
  if (std::adjacent_find(arcs_.begin(), arcs_.end()) != arcs_.end()) {
    throw InputError("Digraph: duplicate arc");
  }
  out_.assign(static_cast<std::size_t>(n_), {});
  in_.assign(static_cast<std::size_t>(n_), {});
  for (const Arc& a : arcs_) {
    out_[static_cast<std::size_t>(a.tail)].push_back(a.head);
    in_[static_cast<std::size_t>(a.head)].push_back(a.tail);
  }
  // arcs_ is sorted by (tail, head), so out_ lists are already sorted.
  for (auto& nb : in_) std::sort(nb.begin(), nb.end());
}

void Digraph::check_vertex(VertexId v) const { check_range(v, n_, "Digraph"); }

bool Digraph::has_arc(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

const std::vector<VertexId>& Digraph::out_neighbors(VertexId v) const {
  check_vertex(v);
  return out_[static_cast<std::size_t>(v)];
}

const std::vector<VertexId>& Digraph::in_neighbors(VertexId v) const {
  check_vertex(v);
  return in_[static_cast<std::size_t>(v)];
}

int Digraph::out_degree(VertexId v) const {
  return static_cast<int>(out_neighbors(v).size());
}

int Digraph::in_degree(VertexId v) const {
  return static_cast<int>(in_neighbors(v).size());
}

DegreeProfile degree_profile(const Digraph& d, VertexId v) {
  DegreeProfile p;
  p.in = d.in_degree(v);
  p.out = d.out_degree(v);
  p.total = p.in + p.out;
  return p;
}

DegreeProfile restricted_degree(const Digraph& d, VertexId v,
                                std::span<const VertexId> inside) {
  check_range(v, d.order(), "restricted_degree");
  std::vector<char> member(static_cast<std::size_t>(d.order()), 0);
  for (VertexId u : inside) {
    check_range(u, d.order(), "restricted_degree");
    member[static_cast<std::size_t>(u)] = 1;
  }
  member[static_cast<std::size_t>(v)] = 0;  // v itself never counts
  DegreeProfile p;
  for (VertexId u : d.out_neighbors(v)) p.out += member[static_cast<std::size_t>(u)];
  for (VertexId u : d.in_neighbors(v)) p.in += member[static_cast<std::size_t>(u)];
  p.total = p.in + p.out;
  return p;
}

DegreeProfile restricted_degree_arcs(const Digraph& d, VertexId v,
                                     std::span<const Arc> subdigraph) {
  std::vector<VertexId> inside;
  inside.reserve(subdigraph.size() * 2);
  for (const Arc& a : subdigraph) {
    if (!d.has_arc(a.tail, a.head)) {
      throw InputError("restricted_degree_arcs: arc " + to_string(a) + " not in digraph");
    }
    inside.push_back(a.tail);
    inside.push_back(a.head);
  }
  std::sort(inside.begin(), inside.end());
  inside.erase(std::unique(inside.begin(), inside.end()), inside.end());
  return restricted_degree(d, v, inside);
}

int min_semi_degree(const Digraph& d) {
  if (d.order() == 0) throw InputError("min_semi_degree: empty digraph");
  int best = d.order();  // upper bound: degrees are < n
  for (VertexId v = 0; v < d.order(); ++v) {
    best = std::min(best, std::min(d.in_degree(v), d.out_degree(v)));
  }
  return best;
}

VertexId InducedSubdigraph::to_local(VertexId v) const {
  for (std::size_t i = 0; i < original.size(); ++i) {
    if (original[i] == v) return static_cast<VertexId>(i);
  }
  return -1;
}

InducedSubdigraph induced(const Digraph& d, std::span<const VertexId> x) {
  std::vector<VertexId> verts(x.begin(), x.end());
  std::sort(verts.begin(), verts.end());
  if (std::adjacent_find(verts.begin(), verts.end()) != verts.end()) {
    throw InputError("induced: duplicate vertex in X");
  }
  std::vector<VertexId> local(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < verts.size(); ++i) {
    check_range(verts[i], d.order(), "induced");
    local[static_cast<std::size_t>(verts[i])] = static_cast<VertexId>(i);
  }
  std::vector<Arc> arcs;
  for (const Arc& a : d.arcs()) {
    VertexId lt = local[static_cast<std::size_t>(a.tail)];
    VertexId lh = local[static_cast<std::size_t>(a.head)];
    if (lt >= 0 && lh >= 0) arcs.push_back(Arc{lt, lh});
  }
  return InducedSubdigraph{Digraph(static_cast<VertexId>(verts.size()), std::move(arcs)),
                           std::move(verts)};
}

InducedSubdigraph arc_induced(const Digraph& d, std::span<const Arc> arcs) {
  std::set<VertexId> verts;
  for (const Arc& a : arcs) {
    if (!d.has_arc(a.tail, a.head)) {
      throw InputError("arc_induced: arc " + to_string(a) + " not in digraph");
    }
    verts.insert(a.tail);
    verts.insert(a.head);
  }
  std::vector<VertexId> order(verts.begin(), verts.end());
  std::vector<VertexId> local(static_cast<std::size_t>(d.order()), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    local[static_cast<std::size_t>(order[i])] = static_cast<VertexId>(i);
  }
  std::vector<Arc> relabeled;
  relabeled.reserve(arcs.size());
  for (const Arc& a : arcs) {
    relabeled.push_back(Arc{local[static_cast<std::size_t>(a.tail)],
                            local[static_cast<std::size_t>(a.head)]});
  }
  return InducedSubdigraph{Digraph(static_cast<VertexId>(order.size()), std::move(relabeled)),
                           std::move(order)};
}

Digraph union_of(const Digraph& d1, const Digraph& d2) {
  std::vector<Arc> arcs(d1.arcs().begin(), d1.arcs().end());
  arcs.insert(arcs.end(), d2.arcs().begin(), d2.arcs().end());
  std::sort(arcs.begin(), arcs.end());
  arcs.erase(std::unique(arcs.begin(), arcs.end()), arcs.end());
  return Digraph(std::max(d1.order(), d2.order()), std::move(arcs));
}

UndirectedGraph underlying_graph(const Digraph& d) {
  std::vector<Edge> edges;
  edges.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) edges.emplace_back(a.tail, a.head);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return UndirectedGraph(d.order(), std::move(edges));
}

bool are_adjacent(const Digraph& d, VertexId u, VertexId v) {
  if (u == v) throw InputError("are_adjacent: u == v");
  return d.has_arc(u, v) || d.has_arc(v, u);
}

bool is_semicomplete(const Digraph& d) {
  for (VertexId u = 0; u < d.order(); ++u) {
    for (VertexId v = u + 1; v < d.order(); ++v) {
      if (!d.has_arc(u, v) && !d.has_arc(v, u)) return false;
    }
  }
  return true;
}

Digraph complete_digraph(VertexId n) {
  if (n < 0) throw InputError("complete_digraph: negative order");
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u != v) arcs.push_back(Arc{u, v});
    }
  }
  return Digraph(n, std::move(arcs));
}

std::string to_string(const Arc& a) {
  return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")";
}

}  // namespace ditrail
