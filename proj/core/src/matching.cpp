#include "ditrail/matching.hpp"

#include <algorithm>
#include <queue>

#include "ditrail/errors.hpp"

namespace ditrail {

namespace {

constexpr VertexId kNone = -1;

std::vector<VertexId> mate_table(const UndirectedGraph& g, const Matching& m) {
  std::vector<VertexId> mate(static_cast<std::size_t>(g.order()), kNone);
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.a, e.b)) {
      throw InputError("matching edge {" + std::to_string(e.a) + "," + std::to_string(e.b) +
                       "} not in graph");
    }
    if (mate[static_cast<std::size_t>(e.a)] != kNone ||
        mate[static_cast<std::size_t>(e.b)] != kNone) {
      throw InputError("matching edges not vertex-disjoint");
    }
    mate[static_cast<std::size_t>(e.a)] = e.b;
    mate[static_cast<std::size_t>(e.b)] = e.a;
  }
  return mate;
}

Matching matching_from_mates(const std::vector<VertexId>& mate) {
  Matching m;
  for (VertexId v = 0; v < static_cast<VertexId>(mate.size()); ++v) {
    VertexId w = mate[static_cast<std::size_t>(v)];
    if (w != kNone && v < w) m.edges.emplace_back(v, w);
  }
  return m;
}

// Edmonds' blossom search for one augmenting path from `root`. Returns the
// unmatched endpoint, or kNone; parent[] then encodes the alternating path.
class BlossomSearch {
 public:
  BlossomSearch(const UndirectedGraph& g, std::vector<VertexId>& mate)
      : g_(g), mate_(mate), n_(static_cast<std::size_t>(g.order())) {}

  VertexId find_path(VertexId root) {
    parent_.assign(n_, kNone);
    base_.resize(n_);
    for (std::size_t i = 0; i < n_; ++i) base_[i] = static_cast<VertexId>(i);
    in_tree_.assign(n_, 0);
    in_tree_[static_cast<std::size_t>(root)] = 1;

    std::queue<VertexId> q;
    q.push(root);
    while (!q.empty()) {
      VertexId v = q.front();
      q.pop();
      for (VertexId to : g_.neighbors(v)) {
        if (base_[static_cast<std::size_t>(v)] == base_[static_cast<std::size_t>(to)] ||
            mate_[static_cast<std::size_t>(v)] == to) {
          continue;
        }
        if (to == root ||
            (mate_[static_cast<std::size_t>(to)] != kNone &&
             parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(to)])] != kNone)) {
          contract_blossom(v, to, q);
        } else if (parent_[static_cast<std::size_t>(to)] == kNone) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mate_[static_cast<std::size_t>(to)] == kNone) return to;
          VertexId next = mate_[static_cast<std::size_t>(to)];
          in_tree_[static_cast<std::size_t>(next)] = 1;
          q.push(next);
        }
      }
    }
    return kNone;
  }

  const std::vector<VertexId>& parent() const { return parent_; }

 private:
  VertexId lowest_common_base(VertexId a, VertexId b) const {
    std::vector<char> seen(n_, 0);
    for (;;) {
      a = base_[static_cast<std::size_t>(a)];
      seen[static_cast<std::size_t>(a)] = 1;
      if (mate_[static_cast<std::size_t>(a)] == kNone) break;
      a = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(a)])];
    }
    for (;;) {
      b = base_[static_cast<std::size_t>(b)];
      if (seen[static_cast<std::size_t>(b)]) return b;
      b = parent_[static_cast<std::size_t>(mate_[static_cast<std::size_t>(b)])];
    }
  }

  void mark_path(VertexId v, VertexId stem, VertexId child, std::vector<char>& in_blossom) {
    while (base_[static_cast<std::size_t>(v)] != stem) {
      VertexId mv = mate_[static_cast<std::size_t>(v)];
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(v)])] = 1;
      in_blossom[static_cast<std::size_t>(base_[static_cast<std::size_t>(mv)])] = 1;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mv;
      v = parent_[static_cast<std::size_t>(mv)];
    }
  }

  void contract_blossom(VertexId v, VertexId to, std::queue<VertexId>& q) {
    VertexId stem = lowest_common_base(v, to);
    std::vector<char> in_blossom(n_, 0);
    mark_path(v, stem, to, in_blossom);
    mark_path(to, stem, v, in_blossom);
    for (std::size_t i = 0; i < n_; ++i) {
      if (in_blossom[static_cast<std::size_t>(base_[i])]) {
        base_[i] = stem;
        if (!in_tree_[i]) {
          in_tree_[i] = 1;
          q.push(static_cast<VertexId>(i));
        }
      }
    }
  }

  const UndirectedGraph& g_;
  std::vector<VertexId>& mate_;
  std::size_t n_;
  std::vector<VertexId> parent_;
  std::vector<VertexId> base_;
  std::vector<char> in_tree_;
};

std::vector<VertexId> path_from_parents(const std::vector<VertexId>& parent,
                                        const std::vector<VertexId>& mate, VertexId endpoint) {
  std::vector<VertexId> path = {endpoint};
  VertexId v = endpoint;
  for (;;) {
    VertexId pv = parent[static_cast<std::size_t>(v)];
    path.push_back(pv);
    if (mate[static_cast<std::size_t>(pv)] == kNone) break;  // reached the root
    path.push_back(mate[static_cast<std::size_t>(pv)]);
    v = mate[static_cast<std::size_t>(pv)];
  }
  std::reverse(path.begin(), path.end());  // root first
  return path;
}

void flip_along(std::vector<VertexId>& mate, const std::vector<VertexId>& parent,
                VertexId endpoint) {
  VertexId v = endpoint;
  while (v != kNone) {
    VertexId pv = parent[static_cast<std::size_t>(v)];
    VertexId next = mate[static_cast<std::size_t>(pv)];
    mate[static_cast<std::size_t>(v)] = pv;
    mate[static_cast<std::size_t>(pv)] = v;
    v = next;
  }
}

}  // namespace

bool Matching::covers(VertexId v) const {
  return std::any_of(edges.begin(), edges.end(),
                     [v](const Edge& e) { return e.a == v || e.b == v; });
}

std::vector<VertexId> Matching::covered_vertices() const {
  std::vector<VertexId> vs;
  vs.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    vs.push_back(e.a);
    vs.push_back(e.b);
  }
  std::sort(vs.begin(), vs.end());
  return vs;
}

Matching maximum_matching(const UndirectedGraph& g) {
  std::vector<VertexId> mate(static_cast<std::size_t>(g.order()), kNone);
  // Greedy warm start, then augment to optimality.
  for (const Edge& e : g.edges()) {
    if (mate[static_cast<std::size_t>(e.a)] == kNone &&
        mate[static_cast<std::size_t>(e.b)] == kNone) {
      mate[static_cast<std::size_t>(e.a)] = e.b;
      mate[static_cast<std::size_t>(e.b)] = e.a;
    }
  }
  BlossomSearch search(g, mate);
  for (VertexId root = 0; root < g.order(); ++root) {
    if (mate[static_cast<std::size_t>(root)] != kNone) continue;
    VertexId endpoint = search.find_path(root);
    if (endpoint != kNone) flip_along(mate, search.parent(), endpoint);
  }
  return matching_from_mates(mate);
}

std::optional<std::vector<VertexId>> find_augmenting_path(const UndirectedGraph& g,
                                                          const Matching& m) {
  std::vector<VertexId> mate = mate_table(g, m);
  BlossomSearch search(g, mate);
  for (VertexId root = 0; root < g.order(); ++root) {
    if (mate[static_cast<std::size_t>(root)] != kNone) continue;
    VertexId endpoint = search.find_path(root);
    if (endpoint != kNone) return path_from_parents(search.parent(), mate, endpoint);
  }
  return std::nullopt;
}

Matching augment_along(const Matching& m, std::span<const VertexId> path) {
  if (path.size() < 2 || path.size() % 2 != 0) {
    throw InputError("augment_along: augmenting path must have even order");
  }
  Matching out = m;
  // Path edges alternate unmatched/matched starting and ending unmatched.
  for (std::size_t i = 0; i + 1 < path.size(); i += 2) {
    Edge unmatched_edge(path[i], path[i + 1]);
    out.edges.push_back(unmatched_edge);
  }
  for (std::size_t i = 1; i + 1 < path.size(); i += 2) {
    Edge matched_edge(path[i], path[i + 1]);
    auto it = std::find(out.edges.begin(), out.edges.end(), matched_edge);
    if (it == out.edges.end()) {
      throw InputError("augment_along: path edge expected in matching");
    }
    out.edges.erase(it);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

int matching_number(const UndirectedGraph& g) {
  return static_cast<int>(maximum_matching(g).size());
}

int matching_number_digraph(const Digraph& d, std::span<const VertexId> s) {
  if (s.empty()) throw InputError("matching_number_digraph: empty S");
  InducedSubdigraph h = induced(d, s);
  return matching_number(underlying_graph(h.graph));
}

Arc witness_arc(const Digraph& h, const Edge& e) {
  if (h.has_arc(e.a, e.b)) return Arc{e.a, e.b};
  if (h.has_arc(e.b, e.a)) return Arc{e.b, e.a};
  throw InputError("witness_arc: no arc realizes {" + std::to_string(e.a) + "," +
                   std::to_string(e.b) + "}");
}

bool degree_forces_augmenting_path(const Digraph& h, const Matching& m,
                                   std::span<const VertexId> x) {
  const int mm = static_cast<int>(m.size());
  if (mm == 0) throw PreconditionError("degree_forces_augmenting_path: |M| = 0");
  UndirectedGraph ug = underlying_graph(h);
  mate_table(ug, m);  // validates M against UG(H)

  std::vector<VertexId> expected;
  for (VertexId v = 0; v < h.order(); ++v) {
    if (!m.covers(v)) expected.push_back(v);
  }
  std::vector<VertexId> given(x.begin(), x.end());
  std::sort(given.begin(), given.end());
  if (given != expected) {
    throw PreconditionError("degree_forces_augmenting_path: X != V(H) - V(M)");
  }
  if (given.size() < 2) {
    throw PreconditionError("degree_forces_augmenting_path: need |X| >= 2");
  }
  for (VertexId v : given) {
    if (h.degree(v) < 2 * mm - 1) {
      throw PreconditionError("degree_forces_augmenting_path: degree of " + std::to_string(v) +
                              " below 2m-1");
    }
  }
  bool threshold_hit = std::any_of(given.begin(), given.end(),
                                   [&](VertexId v) { return h.degree(v) >= 2 * mm + 1; });
  if (!threshold_hit) return true;  // vacuous
  return find_augmenting_path(ug, m).has_value();
}

namespace {

bool doubly_joined(const Digraph& h, VertexId a, VertexId b) {
  return h.has_arc(a, b) && h.has_arc(b, a);
}

[[noreturn]] void violation(const std::string& what) { throw LemmaViolation(what); }

}  // namespace

bool split_case_triggered(const Digraph& h, const Matching& m) {
  if (m.size() == 0) return false;
  std::vector<VertexId> x;
  for (VertexId v = 0; v < h.order(); ++v) {
    if (!m.covers(v)) x.push_back(v);
  }
  if (x.size() != 2) return false;
  for (VertexId xv : x) {
    int touching = 0;
    for (const Edge& e : m.edges) {
      if (are_adjacent(h, e.a, xv) || are_adjacent(h, e.b, xv)) ++touching;
    }
    if (2 * touching == static_cast<int>(m.size())) return true;
  }
  return false;
}

MatchingStructure analyze_matching_structure(const Digraph& h, const Matching& m) {
  const int mm = static_cast<int>(m.size());
  if (mm == 0) throw PreconditionError("analyze_matching_structure: |M| = 0");
  UndirectedGraph ug = underlying_graph(h);
  mate_table(ug, m);  // validates M
  if (find_augmenting_path(ug, m).has_value()) {
    throw PreconditionError("analyze_matching_structure: M is not maximum");
  }

  MatchingStructure out;
  for (VertexId v = 0; v < h.order(); ++v) {
    if (!m.covers(v)) out.unmatched.push_back(v);
  }
  if (out.unmatched.size() < 2) {
    throw PreconditionError("analyze_matching_structure: need |X| >= 2");
  }
  if (min_semi_degree(h) < mm) {
    throw PreconditionError("analyze_matching_structure: semi-degree below |M|");
  }

  // Unmatched vertices have in- and out-degree exactly |M|.
  for (VertexId x : out.unmatched) {
    if (h.in_degree(x) != mm || h.out_degree(x) != mm) {
      violation("unmatched vertex " + std::to_string(x) + " has semi-degrees (" +
                std::to_string(h.in_degree(x)) + "," + std::to_string(h.out_degree(x)) +
                "), expected " + std::to_string(mm));
    }
  }

  auto pairs_touching = [&](VertexId x) {
    std::vector<Edge> touching;
    for (const Edge& e : m.edges) {
      if (are_adjacent(h, e.a, x) || are_adjacent(h, e.b, x)) touching.push_back(e);
    }
    return touching;
  };

  if (out.unmatched.size() == 2) {
    VertexId xa = out.unmatched[0], xb = out.unmatched[1];
    std::vector<Edge> ma = pairs_touching(xa);
    std::vector<Edge> mb = pairs_touching(xb);
    bool half_a = 2 * static_cast<int>(ma.size()) == mm;
    bool half_b = 2 * static_cast<int>(mb.size()) == mm;
    if (half_a || half_b) {
      if (!half_a) {
        std::swap(xa, xb);
        std::swap(ma, mb);
      }
      MatchingStructure::SplitComponents split;
      split.x_a = xa;
      split.x_b = xb;
      for (const Edge& e : ma) {
        split.comp_a.push_back(e.a);
        split.comp_a.push_back(e.b);
      }
      split.comp_a.push_back(xa);
      std::sort(split.comp_a.begin(), split.comp_a.end());
      // The complementary matched pairs plus the other unmatched vertex.
      for (const Edge& e : m.edges) {
        if (std::find(ma.begin(), ma.end(), e) == ma.end()) {
          split.comp_b.push_back(e.a);
          split.comp_b.push_back(e.b);
        }
      }
      split.comp_b.push_back(xb);
      std::sort(split.comp_b.begin(), split.comp_b.end());

      for (const auto* comp : {&split.comp_a, &split.comp_b}) {
        for (VertexId u : *comp) {
          for (VertexId v : *comp) {
            if (u != v && !h.has_arc(u, v)) {
              violation("split component not complete: missing arc (" + std::to_string(u) +
                        "," + std::to_string(v) + ")");
            }
          }
        }
      }
      for (VertexId u : split.comp_a) {
        for (VertexId v : split.comp_b) {
          if (are_adjacent(h, u, v)) {
            violation("split components joined by an arc near (" + std::to_string(u) + "," +
                      std::to_string(v) + ")");
          }
        }
      }
      std::vector<Edge> mb_expected;
      for (const Edge& e : m.edges) {
        if (std::find(ma.begin(), ma.end(), e) == ma.end()) mb_expected.push_back(e);
      }
      if (mb != mb_expected) {
        violation("matched pairs touching the second unmatched vertex are not the complement");
      }
      out.split = std::move(split);
      return out;
    }
  }

  // General case: label each matched pair.
  for (const Edge& e : m.edges) {
    auto joined_to_all = [&](VertexId w) {
      return std::all_of(out.unmatched.begin(), out.unmatched.end(),
                         [&](VertexId x) { return doubly_joined(h, w, x); });
    };
    bool a_ok = joined_to_all(e.a);
    bool b_ok = joined_to_all(e.b);
    if (a_ok == b_ok) {
      violation("matched pair {" + std::to_string(e.a) + "," + std::to_string(e.b) + "} has " +
                (a_ok ? "both" : "neither") + " endpoint(s) doubly joined to every unmatched vertex");
    }
    MatchingStructure::PairLabel label;
    label.e = e;
    label.x_adjacent = a_ok ? e.a : e.b;
    label.x_avoiding = a_ok ? e.b : e.a;
    if (restricted_degree(h, label.x_avoiding, out.unmatched).total != 0) {
      violation("vertex " + std::to_string(label.x_avoiding) +
                " has a neighbor among the unmatched vertices");
    }
    out.labels.push_back(label);
    out.independent_set.push_back(label.x_avoiding);
  }
  std::sort(out.independent_set.begin(), out.independent_set.end());

  for (std::size_t i = 0; i < out.independent_set.size(); ++i) {
    for (std::size_t j = i + 1; j < out.independent_set.size(); ++j) {
      if (are_adjacent(h, out.independent_set[i], out.independent_set[j])) {
        violation("x-avoiding endpoints are not independent");
      }
    }
  }
  for (const auto& label : out.labels) {
    if (h.in_degree(label.x_avoiding) != mm || h.out_degree(label.x_avoiding) != mm) {
      violation("x-avoiding vertex " + std::to_string(label.x_avoiding) +
                " does not have semi-degrees |M|");
    }
    for (const auto& other : out.labels) {
      if (!doubly_joined(h, label.x_avoiding, other.x_adjacent)) {
        violation("x-avoiding vertex " + std::to_string(label.x_avoiding) +
                  " not doubly joined to x-adjacent vertex " + std::to_string(other.x_adjacent));
      }
    }
  }
  return out;
}

}  // namespace ditrail
