#include <benchmark/benchmark.h>

#include <random>

#include "ditrail/matching.hpp"

using namespace ditrail;

namespace {

UndirectedGraph random_graph(VertexId n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if ((rng() >> 11) * 0x1.0p-53 < p) edges.emplace_back(u, v);
    }
  }
  return UndirectedGraph(n, std::move(edges));
}

void BlossomMaximumMatching(benchmark::State& state) {
  UndirectedGraph g = random_graph(static_cast<VertexId>(state.range(0)), 0.3, 5);
  for (auto _ : state) {
    Matching m = maximum_matching(g);
    benchmark::DoNotOptimize(m);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BlossomMaximumMatching)->RangeMultiplier(2)->Range(8, 128)->Complexity();

void AugmentingPathQuery(benchmark::State& state) {
  UndirectedGraph g = random_graph(static_cast<VertexId>(state.range(0)), 0.3, 9);
  Matching m = maximum_matching(g);
  for (auto _ : state) {
    auto path = find_augmenting_path(g, m);
    benchmark::DoNotOptimize(path);
  }
}
BENCHMARK(AugmentingPathQuery)->RangeMultiplier(2)->Range(8, 64);

}  // namespace
