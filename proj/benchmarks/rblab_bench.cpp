#include <benchmark/benchmark.h>

#include "rblab/bounds.hpp"
#include "rblab/nesting.hpp"
#include "rblab/packing.hpp"
#include "rblab/rainbow.hpp"
#include "rblab/sampling.hpp"
#include "rblab/search.hpp"

using namespace rblab;

static void BM_RainbowDetector(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  const auto sys = random_system(n, 10, 0.5, rng);
  const auto pattern = PatternGraph::clique(4);
  for (auto _ : state) benchmark::DoNotOptimize(is_rainbow_free(sys, pattern));
}
BENCHMARK(BM_RainbowDetector)->DenseRange(5, 9, 2);

static void BM_BranchAndBound(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bnb_optimum(n, 4, 7).optimum);
}
BENCHMARK(BM_BranchAndBound)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);

static void BM_GreedyPacking(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(11);
  const auto wg = random_weighting(n, 9, rng);
  for (auto _ : state) benchmark::DoNotOptimize(greedy_packing(wg, 5));
}
BENCHMARK(BM_GreedyPacking)->DenseRange(6, 12, 3);

static void BM_TuranInequalities(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(verify_turan_inequalities(4, 12, n_max).violations.size());
}
BENCHMARK(BM_TuranInequalities)->Arg(100)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
