#include <doctest.h>

#include "ditrail/errors.hpp"
#include "ditrail/trail.hpp"
#include "support/exhaustive.hpp"

using namespace ditrail;

TEST_CASE("ditrail validity") {
  Ditrail t({{0, 1}, {1, 2}});
  CHECK(t.initial_vertex() == 0);
  CHECK(t.terminal_vertex() == 2);
  CHECK_FALSE(t.is_closed());
  CHECK(t.vertex_sequence() == std::vector<VertexId>{0, 1, 2});

  Ditrail closed({{0, 1}, {1, 0}});
  CHECK(closed.is_closed());
  CHECK(closed.length() == 2);

  CHECK_THROWS_AS(Ditrail({}), InputError);
  CHECK_THROWS_AS(Ditrail({{0, 1}, {2, 0}}), InputError);          // broken chain
  CHECK_THROWS_AS(Ditrail({{0, 1}, {1, 0}, {0, 1}}), InputError);  // repeated arc
  CHECK_THROWS_AS(Ditrail({{0, 0}}), InputError);                  // loop
}

TEST_CASE("subtrail of closed trail") {
  // 0 -> 1 -> 2 -> 0
  Ditrail q({{0, 1}, {1, 2}, {2, 0}});
  Ditrail part = subtrail_of_closed(q, 1, 0);
  CHECK(part.vertex_sequence() == std::vector<VertexId>{1, 2, 0});
  // from == to keeps the full rotation
  Ditrail full = subtrail_of_closed(q, 2, 2);
  CHECK(full.length() == 3);
  CHECK(full.initial_vertex() == 2);
  CHECK_THROWS_AS(subtrail_of_closed(q, 0, 9), InputError);

  // Full rotation even when the trail revisits the start vertex mid-way.
  Ditrail eight({{0, 1}, {1, 0}, {0, 2}, {2, 0}});
  CHECK(subtrail_of_closed(eight, 0, 0).length() == 4);
  // Distinct endpoints still stop at the first arrival.
  CHECK(subtrail_of_closed(eight, 0, 1).length() == 1);
}

TEST_CASE("splice replaces the dropped portion") {
  // Host 2-cycle u=0, v=1; T = 0 -> 2 -> 1 replaces arc (0,1).
  Ditrail q({{0, 1}, {1, 0}});
  Ditrail t({{0, 2}, {2, 1}});
  Ditrail spliced = splice(q, t, 0, 1);
  CHECK(spliced.is_closed());
  CHECK(spliced.length() == 3);
  CHECK(spliced.visits(2));
  CHECK(spliced.vertex_sequence() == std::vector<VertexId>{1, 0, 2, 1});
}

TEST_CASE("splice with equal endpoints keeps the whole host") {
  Ditrail q({{0, 1}, {1, 2}, {2, 0}});
  Ditrail loop({{0, 3}, {3, 0}});
  Ditrail spliced = splice(q, loop, 0, 0);
  CHECK(spliced.length() == 5);
  CHECK(spliced.visits(3));
  for (const Arc& a : q.arcs()) CHECK(spliced.uses_arc(a));
}

TEST_CASE("splice errors") {
  Ditrail q({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(splice(q, Ditrail({{0, 1}}), 0, 1), SpliceError);  // arc overlap
  CHECK_THROWS_AS(splice(q, Ditrail({{2, 3}}), 2, 3), InputError);   // endpoints off the host
  Ditrail open({{0, 1}});
  CHECK_THROWS_AS(splice(open, Ditrail({{1, 0}}), 1, 0), InputError);  // host not closed
  // splice length arithmetic: |kept| + |T|
  Ditrail t({{0, 2}, {2, 1}});
  CHECK(splice(q, t, 0, 1).length() == subtrail_of_closed(q, 1, 0).length() + t.length());
}

TEST_CASE("balanced subdigraph detection") {
  Digraph d = complete_digraph(3);
  auto ok = make_balanced_subdigraph(d, {{0, 1}, {1, 0}});
  REQUIRE(ok.has_value());
  CHECK(ok->connected);
  auto unbalanced = make_balanced_subdigraph(d, {{0, 1}, {1, 2}});
  CHECK_FALSE(unbalanced.has_value());
  Digraph two(6, {{0, 1}, {1, 0}, {3, 4}, {4, 3}});
  auto split = make_balanced_subdigraph(two, {{0, 1}, {1, 0}, {3, 4}, {4, 3}});
  REQUIRE(split.has_value());
  CHECK_FALSE(split->connected);
  CHECK_THROWS_AS(make_balanced_subdigraph(d, {{0, 1}, {0, 1}}), InputError);
}

TEST_CASE("hierholzer on a 2-cycle") {
  Digraph d(2, {{0, 1}, {1, 0}});
  auto b = make_balanced_subdigraph(d, {{0, 1}, {1, 0}});
  Ditrail t = hierholzer(*b, 0);
  CHECK(t.is_closed());
  CHECK(t.length() == 2);
}

TEST_CASE("hierholzer on two triangles sharing one vertex") {
  Digraph d(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
  auto b = make_balanced_subdigraph(d, std::vector<Arc>(d.arcs().begin(), d.arcs().end()));
  REQUIRE(b.has_value());
  Ditrail t = hierholzer(*b, 0);
  CHECK(t.is_closed());
  CHECK(t.length() == 6);
}

TEST_CASE("hierholzer on the complete digraph of order three") {
  Digraph d = complete_digraph(3);
  std::vector<Arc> arcs(d.arcs().begin(), d.arcs().end());
  // Independent exhaustive sequencing confirms a 6-arc circuit exists.
  auto brute = testing::exhaustive_euler_circuit(arcs, 0);
  REQUIRE(brute.has_value());
  CHECK(brute->size() == 6);

  auto b = make_balanced_subdigraph(d, arcs);
  Ditrail t = hierholzer(*b, 0);
  CHECK(t.is_closed());
  CHECK(t.length() == 6);
  for (const Arc& a : arcs) CHECK(t.uses_arc(a));
}

TEST_CASE("hierholzer contract violations") {
  Digraph d(6, {{0, 1}, {1, 0}, {3, 4}, {4, 3}});
  auto split = make_balanced_subdigraph(d, std::vector<Arc>(d.arcs().begin(), d.arcs().end()));
  REQUIRE(split.has_value());
  CHECK_THROWS_AS(hierholzer(*split, 0), ContractViolation);
  BalancedSubdigraph empty;
  empty.connected = true;
  CHECK_THROWS_AS(hierholzer(empty, 0), ContractViolation);
  BalancedSubdigraph lying;  // hand-built aggregate bypassing the factory
  lying.arcs = {{0, 1}};
  lying.connected = true;
  CHECK_THROWS_AS(hierholzer(lying, 0), ContractViolation);
}
