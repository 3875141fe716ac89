#include <doctest.h>

#include <random>

#include "ditrail/digraph.hpp"
#include "ditrail/errors.hpp"
#include "support/exhaustive.hpp"

using namespace ditrail;

namespace {

Digraph three_cycle() { return Digraph(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("digraph construction rejects loops and duplicates") {
  CHECK_THROWS_AS(Digraph(3, {{0, 0}}), InputError);
  CHECK_THROWS_AS(Digraph(3, {{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(Digraph(2, {{0, 5}}), InputError);
  CHECK_THROWS_AS(Digraph(-1, {}), InputError);
  Digraph d(2, {{0, 1}, {1, 0}});
  CHECK(d.arc_count() == 2);
}

TEST_CASE("degree_profile") {
  Digraph k3 = complete_digraph(3);
  for (VertexId v = 0; v < 3; ++v) {
    CHECK(degree_profile(k3, v) == DegreeProfile{2, 2, 4});
  }
  CHECK(degree_profile(three_cycle(), 1) == DegreeProfile{1, 1, 2});
  Digraph single(2, {{0, 1}});
  CHECK(degree_profile(single, 0) == DegreeProfile{0, 1, 1});
  CHECK_THROWS_AS(degree_profile(single, 7), InputError);
}

TEST_CASE("restricted_degree counts only inside H, never the vertex itself") {
  Digraph k4 = complete_digraph(4);
  std::vector<VertexId> h = {1, 2};
  CHECK(restricted_degree(k4, 0, h) == DegreeProfile{2, 2, 4});
  std::vector<VertexId> only2 = {2};
  CHECK(restricted_degree(three_cycle(), 0, only2) == DegreeProfile{1, 0, 1});
  std::vector<VertexId> self = {0};
  CHECK(restricted_degree(k4, 0, self) == DegreeProfile{0, 0, 0});
  std::vector<VertexId> bad = {9};
  CHECK_THROWS_AS(restricted_degree(k4, 0, bad), InputError);
}

TEST_CASE("restricted_degree over an arc subdigraph uses its vertex set") {
  // Degrees count arcs of D toward the subdigraph's vertices, not the
  // subdigraph's own arcs.
  Digraph k4 = complete_digraph(4);
  std::vector<Arc> sub = {{1, 2}};
  CHECK(restricted_degree_arcs(k4, 0, sub) == DegreeProfile{2, 2, 4});
  CHECK(restricted_degree_arcs(k4, 1, sub) == DegreeProfile{1, 1, 2});  // self excluded
  std::vector<Arc> missing = {{0, 1}};
  Digraph sparse(3, {{1, 0}});
  CHECK_THROWS_AS(restricted_degree_arcs(sparse, 2, missing), InputError);
}

TEST_CASE("restricted_degree with everything but v equals degree_profile") {
  std::mt19937_64 rng(7);
  for (int iter = 0; iter < 40; ++iter) {
    Digraph d = testing::random_test_digraph(rng, 6, 1 + rng() % 20);
    for (VertexId v = 0; v < d.order(); ++v) {
      std::vector<VertexId> rest;
      for (VertexId u = 0; u < d.order(); ++u) {
        if (u != v) rest.push_back(u);
      }
      CHECK(restricted_degree(d, v, rest) == degree_profile(d, v));
    }
  }
}

TEST_CASE("min_semi_degree") {
  CHECK(min_semi_degree(complete_digraph(5)) == 4);
  CHECK(min_semi_degree(three_cycle()) == 1);
  Digraph with_isolated(3, {{0, 1}});
  CHECK(min_semi_degree(with_isolated) == 0);
  CHECK_THROWS_AS(min_semi_degree(Digraph(0, {})), InputError);
}

TEST_CASE("induced subdigraph reindexes and records the mapping") {
  Digraph k4 = complete_digraph(4);
  std::vector<VertexId> x = {1, 3};
  InducedSubdigraph sub = induced(k4, x);
  CHECK(sub.graph == complete_digraph(2));
  CHECK(sub.to_original(0) == 1);
  CHECK(sub.to_original(1) == 3);
  CHECK(sub.to_local(3) == 1);
  CHECK(sub.to_local(0) == -1);

  std::vector<VertexId> pair = {0, 1};
  InducedSubdigraph edge = induced(three_cycle(), pair);
  CHECK(edge.graph == Digraph(2, {{0, 1}}));

  std::vector<VertexId> all = {0, 1, 2};
  CHECK(induced(three_cycle(), all).graph == three_cycle());

  std::vector<VertexId> bad = {0, 5};
  CHECK_THROWS_AS(induced(three_cycle(), bad), InputError);
}

TEST_CASE("arc_induced keeps exactly the given arcs") {
  Digraph k3 = complete_digraph(3);
  std::vector<Arc> one = {{0, 1}};
  InducedSubdigraph sub = arc_induced(k3, one);
  CHECK(sub.graph.order() == 2);
  CHECK(sub.graph.arc_count() == 1);
  CHECK(sub.original == std::vector<VertexId>{0, 1});

  std::vector<Arc> all(k3.arcs().begin(), k3.arcs().end());
  CHECK(arc_induced(k3, all).graph == k3);

  CHECK(arc_induced(k3, std::vector<Arc>{}).graph.order() == 0);
  std::vector<Arc> missing = {{0, 1}, {1, 0}};
  Digraph sparse(3, {{0, 1}});
  CHECK_THROWS_AS(arc_induced(sparse, missing), InputError);
}

TEST_CASE("union_of") {
  Digraph d = three_cycle();
  CHECK(union_of(d, d) == d);
  Digraph a(2, {{0, 1}}), b(2, {{1, 0}});
  CHECK(union_of(a, b) == Digraph(2, {{0, 1}, {1, 0}}));
  Digraph c1(3, {{0, 1}, {1, 2}, {2, 0}});
  Digraph c2(6, {{3, 4}, {4, 5}, {5, 3}});
  Digraph both = union_of(c1, c2);
  CHECK(both.order() == 6);
  CHECK(both.arc_count() == 6);
}

TEST_CASE("underlying graph merges orientations") {
  CHECK(underlying_graph(complete_digraph(4)).edge_count() == 6);
  Digraph two_cycle(2, {{0, 1}, {1, 0}});
  CHECK(underlying_graph(two_cycle).edge_count() == 1);
  Digraph single(2, {{0, 1}});
  CHECK(underlying_graph(single).edge_count() == 1);
}

TEST_CASE("induced then underlying equals underlying then induced") {
  std::mt19937_64 rng(21);
  for (int iter = 0; iter < 40; ++iter) {
    Digraph d = testing::random_test_digraph(rng, 6, rng() % 24);
    std::vector<VertexId> x = testing::random_vertex_subset(rng, 6, 1 + rng() % 6);
    UndirectedGraph via_digraph = underlying_graph(induced(d, x).graph);
    // Underlying graph of D restricted to X, reindexed the same way.
    std::vector<VertexId> local(6, -1);
    for (std::size_t i = 0; i < x.size(); ++i) local[static_cast<std::size_t>(x[i])] = (VertexId)i;
    std::vector<Edge> expect;
    UndirectedGraph whole = underlying_graph(d);
    for (const Edge& e : whole.edges()) {
      if (local[static_cast<std::size_t>(e.a)] >= 0 && local[static_cast<std::size_t>(e.b)] >= 0) {
        expect.emplace_back(local[static_cast<std::size_t>(e.a)],
                            local[static_cast<std::size_t>(e.b)]);
      }
    }
    UndirectedGraph via_graph(static_cast<VertexId>(x.size()), expect);
    CHECK(via_digraph.edges().size() == via_graph.edges().size());
    CHECK(std::equal(via_digraph.edges().begin(), via_digraph.edges().end(),
                     via_graph.edges().begin()));
  }
}

TEST_CASE("adjacency and semicompleteness") {
  CHECK(is_semicomplete(complete_digraph(4)));
  CHECK(is_semicomplete(three_cycle()));
  Digraph four_cycle(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(are_adjacent(four_cycle, 0, 2));
  CHECK_FALSE(is_semicomplete(four_cycle));
  CHECK_THROWS_AS(are_adjacent(four_cycle, 1, 1), InputError);
}

TEST_CASE("complete digraph shape") {
  Digraph k5 = complete_digraph(5);
  CHECK(k5.arc_count() == 20);
  CHECK(min_semi_degree(k5) == 4);
  CHECK(is_semicomplete(k5));
}

TEST_CASE("degree sums equal arc count") {
  std::mt19937_64 rng(3);
  for (int iter = 0; iter < 50; ++iter) {
    Digraph d = testing::random_test_digraph(rng, 7, rng() % 30);
    int out_sum = 0, in_sum = 0;
    for (VertexId v = 0; v < d.order(); ++v) {
      out_sum += d.out_degree(v);
      in_sum += d.in_degree(v);
    }
    CHECK(out_sum == static_cast<int>(d.arc_count()));
    CHECK(in_sum == static_cast<int>(d.arc_count()));
  }
}
