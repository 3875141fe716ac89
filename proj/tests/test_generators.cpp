#include <doctest.h>

#include "ditrail/connectivity.hpp"
#include "ditrail/errors.hpp"
#include "ditrail/generators.hpp"
#include "ditrail/io.hpp"
#include "ditrail/matching.hpp"
#include "ditrail/oracles.hpp"

using namespace ditrail;

TEST_CASE("random digraph extremes and determinism") {
  GenSpec full;
  full.n = 4;
  full.arc_probability = 1.0;
  CHECK(random_digraph(full) == complete_digraph(4));

  GenSpec empty;
  empty.n = 4;
  empty.arc_probability = 0.0;
  CHECK(random_digraph(empty).arc_count() == 0);

  GenSpec seeded;
  seeded.n = 8;
  seeded.arc_probability = 0.4;
  seeded.seed = 1234;
  CHECK(random_digraph(seeded) == random_digraph(seeded));

  GenSpec bad;
  bad.arc_probability = 1.5;
  CHECK_THROWS_AS(random_digraph(bad), InputError);
}

TEST_CASE("sampler emissions pass their checker") {
  for (TheoremId target : {TheoremId::degree_sum, TheoremId::supereulerian_degree,
                           TheoremId::supereulerian_lambda,
                           TheoremId::semidegree_matching_refined}) {
    GenSpec spec;
    spec.n = 5;
    spec.arc_probability = 0.35;
    spec.seed = 42;
    spec.target = target;
    SampleStats stats;
    std::vector<GeneratedInstance> batch = sample_satisfying(spec, 12, &stats);
    CHECK(batch.size() == 12);
    CHECK(stats.emitted == 12);
    for (const GeneratedInstance& inst : batch) {
      switch (target) {
        case TheoremId::degree_sum:
          CHECK(check_degree_sum_closed_trailable(inst.digraph, inst.s).holds);
          break;
        case TheoremId::supereulerian_degree:
          CHECK(check_supereulerian_degree(inst.digraph).holds);
          break;
        case TheoremId::supereulerian_lambda:
          CHECK(check_supereulerian_lambda(inst.digraph).holds);
          break;
        default:
          CHECK(check_semidegree_matching(inst.digraph, inst.s).refined.holds);
          break;
      }
    }
  }
}

TEST_CASE("sampler is deterministic in the seed") {
  GenSpec spec;
  spec.n = 6;
  spec.arc_probability = 0.3;
  spec.seed = 77;
  spec.target = TheoremId::degree_sum;
  auto a = sample_satisfying(spec, 6, nullptr);
  auto b = sample_satisfying(spec, 6, nullptr);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].digraph == b[i].digraph);
    CHECK(a[i].s == b[i].s);
  }
}

TEST_CASE("impossible target yields zero emissions with a counter") {
  // Cyclability at n = 2 with a nonadjacent pair required: the threshold
  // 2n-1 = 3 cannot be met by a nonadjacent pair, and repairs that would
  // merge the last pair are refused.
  GenSpec spec;
  spec.n = 2;
  spec.arc_probability = 0.3;
  spec.seed = 5;
  spec.target = TheoremId::cyclability;
  spec.require_nonadjacent_pair = true;
  SampleStats stats;
  auto batch = sample_satisfying(spec, 3, &stats);
  CHECK(batch.empty());
  CHECK(stats.emitted == 0);
  CHECK(stats.skipped > 0);
}

TEST_CASE("split instance shape") {
  for (int m : {2, 4}) {
    GeneratedInstance inst = make_split_instance(m, 31);
    CHECK(inst.digraph.order() == 2 * (m + 1) + 2);
    CHECK(static_cast<int>(inst.s.size()) == 2 * (m + 1));
    SemidegreeVerdicts v = check_semidegree_matching(inst.digraph, inst.s);
    CHECK(*v.refined.diagnostics.split_case);
    CHECK(v.refined.holds);
    CHECK(v.baseline.holds);
    // The guaranteed witness exists.
    CHECK(closed_ditrail_through(inst.digraph, inst.s).found());
  }
  CHECK_THROWS_AS(make_split_instance(3, 0), InputError);
  CHECK_THROWS_AS(make_split_instance(0, 0), InputError);
}

TEST_CASE("split instances vary with the seed but stay valid") {
  GeneratedInstance a = make_split_instance(2, 1);
  GeneratedInstance b = make_split_instance(2, 2);
  CHECK(digraph_sha256(a.digraph) != digraph_sha256(b.digraph));
  CHECK(check_semidegree_matching(b.digraph, b.s).refined.holds);
}

TEST_CASE("hunt: zero budget, determinism, audit gate") {
  HuntReport empty = hunt_tightness(4, 5, 0, 9);
  CHECK(empty.findings.empty());
  CHECK(empty.instances_tried == 0);

  HuntReport a = hunt_tightness(4, 6, 60, 9);
  HuntReport b = hunt_tightness(4, 6, 60, 9);
  CHECK(a.instances_tried == b.instances_tried);
  CHECK(a.shape_hits == b.shape_hits);
  REQUIRE(a.findings.size() == b.findings.size());

  // Every reported finding survives a fresh audit: S-strong, boundary degree
  // sum, and an exact negative oracle run.
  for (const TightnessFinding& f : a.findings) {
    CHECK(is_s_strong(f.digraph, f.s));
    CHECK(f.degree_sum == 2 * f.digraph.order() - 4);
    CHECK_FALSE(are_adjacent(f.digraph, f.pair.first, f.pair.second));
    CHECK(closed_ditrail_through(f.digraph, f.s).status == SearchStatus::none);
  }
  CHECK_THROWS_AS(hunt_tightness(2, 1, 5, 0), InputError);
}
