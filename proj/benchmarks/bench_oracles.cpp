#include <benchmark/benchmark.h>

#include "ditrail/generators.hpp"
#include "ditrail/oracles.hpp"

using namespace ditrail;

namespace {

Digraph seeded_digraph(VertexId n, double p, std::uint64_t seed) {
  GenSpec spec;
  spec.n = n;
  spec.arc_probability = p;
  spec.seed = seed;
  return random_digraph(spec);
}

std::vector<VertexId> all_vertices(const Digraph& d) {
  std::vector<VertexId> s(static_cast<std::size_t>(d.order()));
  for (VertexId v = 0; v < d.order(); ++v) s[static_cast<std::size_t>(v)] = v;
  return s;
}

void SpanningTrailDfsComplete(benchmark::State& state) {
  Digraph d = complete_digraph(static_cast<VertexId>(state.range(0)));
  std::vector<VertexId> s = all_vertices(d);
  for (auto _ : state) {
    OracleResult r = closed_ditrail_through(d, s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SpanningTrailDfsComplete)->DenseRange(4, 9);

void SpanningTrailDfsRandom(benchmark::State& state) {
  Digraph d = seeded_digraph(static_cast<VertexId>(state.range(0)), 0.5, 7);
  std::vector<VertexId> s = all_vertices(d);
  for (auto _ : state) {
    OracleResult r = closed_ditrail_through(d, s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SpanningTrailDfsRandom)->DenseRange(5, 9);

void SpanningTrailSubsetEnumeration(benchmark::State& state) {
  Digraph d = seeded_digraph(5, 0.45, static_cast<std::uint64_t>(state.range(0)));
  std::vector<VertexId> s = all_vertices(d);
  for (auto _ : state) {
    OracleResult r = closed_ditrail_through_subsets(d, s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(SpanningTrailSubsetEnumeration)->Arg(1)->Arg(2)->Arg(3);

void DicycleThroughPair(benchmark::State& state) {
  Digraph d = seeded_digraph(static_cast<VertexId>(state.range(0)), 0.4, 11);
  std::vector<VertexId> s = {0, static_cast<VertexId>(state.range(0) - 1)};
  for (auto _ : state) {
    OracleResult r = dicycle_through(d, s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(DicycleThroughPair)->DenseRange(6, 10);

void StrictStrongQuery(benchmark::State& state) {
  GeneratedInstance inst = make_split_instance(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    StrictStrongResult r = is_s_strictly_strong(inst.digraph, inst.s);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(StrictStrongQuery)->Arg(2)->Arg(4);

}  // namespace
