#include <benchmark/benchmark.h>

#include "ditrail/connectivity.hpp"
#include "ditrail/generators.hpp"

using namespace ditrail;

namespace {

void ArcStrongConnectivityComplete(benchmark::State& state) {
  Digraph d = complete_digraph(static_cast<VertexId>(state.range(0)));
  for (auto _ : state) {
    int lambda = arc_strong_connectivity(d);
    benchmark::DoNotOptimize(lambda);
  }
}
BENCHMARK(ArcStrongConnectivityComplete)->RangeMultiplier(2)->Range(8, 64);

void StrongComponentsRandom(benchmark::State& state) {
  GenSpec spec;
  spec.n = static_cast<VertexId>(state.range(0));
  spec.arc_probability = 0.05;
  spec.seed = 13;
  Digraph d = random_digraph(spec);
  for (auto _ : state) {
    SccDecomposition scc = strong_components(d);
    benchmark::DoNotOptimize(scc);
  }
}
BENCHMARK(StrongComponentsRandom)->RangeMultiplier(4)->Range(16, 1024);

}  // namespace
