// Brute-force oracle vs serial apex kernel vs OpenMP apex kernel.
#include <benchmark/benchmark.h>

#include "isogrid/census.hpp"

using namespace isogrid;

static void BM_BruteForce(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_census(dims));
}

static void BM_ApexSerial(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(1)};
  for (auto _ : state) benchmark::DoNotOptimize(apex_census_serial(dims));
}

static void BM_ApexParallel(benchmark::State& state) {
  const GridDims dims{state.range(0), state.range(1)};
  const int threads = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(apex_census(dims, threads));
}

BENCHMARK(BM_BruteForce)->Args({6, 6})->Args({8, 12})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApexSerial)->Args({6, 6})->Args({8, 12})->Args({8, 57})->Args({20, 20})
    ->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ApexParallel)
    ->Args({8, 57, 1})->Args({8, 57, 2})->Args({8, 57, 4})
    ->Args({20, 20, 1})->Args({20, 20, 2})->Args({20, 20, 4})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
