#include <doctest.h>

#include <random>

#include "ditrail/errors.hpp"
#include "ditrail/oracles.hpp"
#include "ditrail/validator.hpp"
#include "support/exhaustive.hpp"

using namespace ditrail;

namespace {

std::vector<VertexId> vs(std::initializer_list<VertexId> list) { return list; }

Digraph cycle(VertexId n) {
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < n; ++v) arcs.push_back(Arc{v, static_cast<VertexId>((v + 1) % n)});
  return Digraph(n, std::move(arcs));
}

Digraph out_star() { return Digraph(4, {{0, 1}, {0, 2}, {0, 3}}); }

}  // namespace

TEST_CASE("closed ditrail through: base cases") {
  Digraph two_cycle(2, {{0, 1}, {1, 0}});
  OracleResult r = closed_ditrail_through(two_cycle, vs({0, 1}));
  REQUIRE(r.found());
  CHECK(r.witness->length() == 2);
  CHECK(validate_certificate(two_cycle, vs({0, 1}), r.witness->vertex_sequence(),
                             r.witness->length()));

  Digraph single(2, {{0, 1}});
  CHECK(closed_ditrail_through(single, vs({0})).status == SearchStatus::none);

  Digraph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  CHECK(closed_ditrail_through(two_triangles, vs({0, 3})).status == SearchStatus::none);

  CHECK_THROWS_AS(closed_ditrail_through(single, {}), InputError);
  CHECK_THROWS_AS(closed_ditrail_through(single, vs({9})), InputError);
}

TEST_CASE("supereulerian and closed-trailable wrappers") {
  CHECK(is_supereulerian(complete_digraph(3)).found());
  CHECK(is_supereulerian(cycle(4)).found());
  CHECK(is_supereulerian(out_star()).status == SearchStatus::none);
  CHECK(is_closed_trailable(complete_digraph(3), vs({0, 1, 2})).found());
}

TEST_CASE("budget zero is inconclusive") {
  OracleResult r = closed_ditrail_through(complete_digraph(3), vs({0}), SearchBudget{0});
  CHECK(r.status == SearchStatus::budget_exhausted);
  OracleResult r2 = closed_ditrail_through_subsets(complete_digraph(3), vs({0}), SearchBudget{0});
  CHECK(r2.status == SearchStatus::budget_exhausted);
}

TEST_CASE("dfs oracle is deterministic and canonical") {
  Digraph k4 = complete_digraph(4);
  OracleResult a = closed_ditrail_through(k4, vs({0, 1, 2, 3}));
  OracleResult b = closed_ditrail_through(k4, vs({3, 2, 1, 0}));
  REQUIRE(a.found());
  REQUIRE(b.found());
  CHECK(a.witness->vertex_sequence() == b.witness->vertex_sequence());
  CHECK(a.witness->initial_vertex() == 0);  // rooted at the smallest W-vertex
  CHECK(a.expansions == b.expansions);
}

TEST_CASE("subset oracle cross-validates the dfs oracle on random instances") {
  std::mt19937_64 rng(97);
  int done = 0, found = 0;
  while (done < 320) {
    VertexId n = 3 + static_cast<VertexId>(rng() % 4);  // 3..6
    Digraph d = testing::random_test_digraph(rng, n, rng() % 15);
    if (d.arc_count() > 14) continue;
    VertexId k = 1 + static_cast<VertexId>(rng() % n);
    std::vector<VertexId> w = testing::random_vertex_subset(rng, n, k);
    OracleResult dfs = closed_ditrail_through(d, w);
    OracleResult sub = closed_ditrail_through_subsets(d, w);
    REQUIRE(dfs.status != SearchStatus::budget_exhausted);
    REQUIRE(sub.status != SearchStatus::budget_exhausted);
    CHECK(dfs.status == sub.status);
    if (dfs.found()) {
      ++found;
      CHECK(validate_certificate(d, w, dfs.witness->vertex_sequence(), dfs.witness->length()));
      CHECK(validate_certificate(d, w, sub.witness->vertex_sequence(), sub.witness->length()));
    }
    ++done;
  }
  CHECK(found > 30);  // the sample exercises both outcomes
}

TEST_CASE("oracles agree on seven vertices too") {
  std::mt19937_64 rng(131);
  int done = 0;
  while (done < 40) {
    Digraph d = testing::random_test_digraph(rng, 7, 6 + rng() % 11);  // |A| <= 16
    std::vector<VertexId> w = testing::random_vertex_subset(rng, 7, 2 + rng() % 4);
    OracleResult dfs = closed_ditrail_through(d, w);
    OracleResult sub = closed_ditrail_through_subsets(d, w, SearchBudget{5'000'000});
    REQUIRE(dfs.status != SearchStatus::budget_exhausted);
    REQUIRE(sub.status != SearchStatus::budget_exhausted);
    CHECK(dfs.status == sub.status);
    ++done;
  }
}

TEST_CASE("existence matches balanced-connected-cover enumeration") {
  std::mt19937_64 rng(41);
  int done = 0;
  while (done < 200) {
    VertexId n = 3 + static_cast<VertexId>(rng() % 3);
    Digraph d = testing::random_test_digraph(rng, n, rng() % 13);
    if (d.arc_count() > 12) continue;
    VertexId k = 1 + static_cast<VertexId>(rng() % n);
    std::vector<VertexId> w = testing::random_vertex_subset(rng, n, k);
    bool cover = testing::exhaustive_balanced_cover(d, w);
    OracleResult dfs = closed_ditrail_through(d, w);
    REQUIRE(dfs.status != SearchStatus::budget_exhausted);
    CHECK(dfs.found() == cover);
    ++done;
  }
}

TEST_CASE("dicycle oracle") {
  Digraph c5 = cycle(5);
  OracleResult r = dicycle_through(c5, vs({0, 1, 2, 3, 4}));
  REQUIRE(r.found());
  CHECK(r.witness->length() == 5);

  OracleResult pair = dicycle_through(complete_digraph(3), vs({0, 2}));
  REQUIRE(pair.found());
  CHECK(pair.witness->length() <= 3);

  CHECK(dicycle_through(out_star(), vs({0, 1})).status == SearchStatus::none);

  // A closed ditrail that is not a dicycle: figure-eight through 0.
  Digraph eight(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  CHECK(closed_ditrail_through(eight, vs({1, 3})).found());
  CHECK(dicycle_through(eight, vs({1, 3})).status == SearchStatus::none);
}

TEST_CASE("dicycle witnesses are simple") {
  std::mt19937_64 rng(59);
  for (int iter = 0; iter < 150; ++iter) {
    VertexId n = 4 + static_cast<VertexId>(rng() % 3);
    Digraph d = testing::random_test_digraph(rng, n, rng() % 20);
    std::vector<VertexId> s = testing::random_vertex_subset(rng, n, 1 + rng() % 3);
    OracleResult r = dicycle_through(d, s);
    if (!r.found()) continue;
    std::vector<VertexId> seq = r.witness->vertex_sequence();
    CHECK(seq.front() == seq.back());
    std::vector<VertexId> interior(seq.begin(), seq.end() - 1);
    std::sort(interior.begin(), interior.end());
    CHECK(std::adjacent_find(interior.begin(), interior.end()) == interior.end());
    for (VertexId v : s) CHECK(r.witness->visits(v));
  }
}

TEST_CASE("strictly strong: witness pair must be nonadjacent") {
  Digraph c4 = cycle(4);
  StrictStrongResult r = is_s_strictly_strong(c4, vs({0, 1, 2, 3}));
  REQUIRE(r.found());
  CHECK(r.witness_pair == std::pair<VertexId, VertexId>{0, 2});
  CHECK(r.witness->visits(0));
  CHECK(r.witness->visits(2));

  // Semicomplete: no nonadjacent pair exists, vacuously not strictly strong.
  CHECK(is_s_strictly_strong(complete_digraph(4), vs({0, 1, 2, 3})).status ==
        SearchStatus::none);

  Digraph two_cycles(4, {{0, 1}, {1, 0}, {2, 3}, {3, 2}});
  CHECK(is_s_strictly_strong(two_cycles, vs({0, 1, 2, 3})).status == SearchStatus::none);

  CHECK_THROWS_AS(is_s_strictly_strong(c4, vs({0})), InputError);
}

TEST_CASE("ditrail with exact vertex set") {
  Digraph d(4, {{0, 1}, {1, 2}, {2, 3}, {1, 3}});
  OracleResult direct = ditrail_with_vertex_set(d, 0, 3, vs({0, 1, 2, 3}));
  REQUIRE(direct.found());
  CHECK(direct.witness->vertex_sequence() == std::vector<VertexId>{0, 1, 2, 3});
  // Exact cover required: the short route misses vertex 2.
  OracleResult no_skip = ditrail_with_vertex_set(d, 0, 3, vs({0, 1, 3}));
  REQUIRE(no_skip.found());
  CHECK(no_skip.witness->vertex_sequence() == std::vector<VertexId>{0, 1, 3});
  CHECK(ditrail_with_vertex_set(Digraph(3, {{0, 1}}), 0, 1, vs({0, 1, 2})).status ==
        SearchStatus::none);
  CHECK_THROWS_AS(ditrail_with_vertex_set(d, 0, 3, vs({1, 2, 3})), InputError);
}

TEST_CASE("trail degree bound: explicit cases") {
  // x adjacent to the whole trail in both directions forces an extension.
  Digraph k4 = complete_digraph(4);
  Ditrail t({{0, 1}, {1, 2}});
  CHECK(trail_degree_bound_holds(k4, t, 3));
  // x on the trail: vacuous.
  CHECK(trail_degree_bound_holds(k4, t, 1));
  // x isolated from the trail.
  Digraph sparse(4, {{0, 1}, {1, 2}});
  CHECK(trail_degree_bound_holds(sparse, Ditrail({{0, 1}, {1, 2}}), 3));
}

TEST_CASE("trail degree bound holds on random samples") {
  std::mt19937_64 rng(73);
  int done = 0;
  while (done < 320) {
    VertexId n = 4 + static_cast<VertexId>(rng() % 3);  // 4..6
    Digraph d = testing::random_test_digraph(rng, n, 4 + rng() % 16);
    // Random trail: greedy arc walk without reuse.
    std::vector<Arc> walk;
    VertexId at = static_cast<VertexId>(rng() % n);
    for (int step = 0; step < 5; ++step) {
      const auto& outs = d.out_neighbors(at);
      if (outs.empty()) break;
      VertexId next = outs[rng() % outs.size()];
      Arc a{at, next};
      if (std::find(walk.begin(), walk.end(), a) != walk.end()) break;
      walk.push_back(a);
      at = next;
    }
    if (walk.empty()) continue;
    Ditrail t(walk);
    VertexId x = static_cast<VertexId>(rng() % n);
    CHECK(trail_degree_bound_holds(d, t, x));
    ++done;
  }
}
