#include <benchmark/benchmark.h>

#include "chordgf/census.hpp"

using namespace chordgf;

static void BM_CensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_serial(n, DiagramClass::k_connected(2)));
}

static void BM_CensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(census_parallel(n, DiagramClass::k_connected(2)));
}

static void BM_CaseCensusSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(case_census_serial(n));
}

static void BM_CaseCensusParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(case_census_parallel(n));
}

BENCHMARK(BM_CensusSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CaseCensusSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CaseCensusParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
