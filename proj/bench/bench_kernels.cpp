// Serial reference vs OpenMP layered kernel for the exact treewidth DP.
#include <benchmark/benchmark.h>

#include <random>

#include "twsep/exact.hpp"
#include "twsep/separator_search.hpp"

namespace {

twsep::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<twsep::Edge> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return twsep::Graph::with_vertices(n, edges);
}

void BM_ExactSerial(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twsep::exact_treewidth_serial(g, 30).treewidth);
  }
}

void BM_ExactParallel(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.3, 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twsep::exact_treewidth(g, 30).treewidth);
  }
}

void BM_EnumerateCandidates(benchmark::State& state) {
  const auto g = random_graph(static_cast<int>(state.range(0)), 0.15, 11);
  for (auto _ : state) {
    benchmark::DoNotOptimize(twsep::enumerate_candidates(g, 50, 0).size());
  }
}

}  // namespace

BENCHMARK(BM_ExactSerial)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExactParallel)->DenseRange(12, 18, 3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCandidates)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
