#include <benchmark/benchmark.h>

#include <omp.h>

#include "knots/enumerate.hpp"

using namespace knots;

static void BM_EnumerateSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_knots_serial(n));
}

static void BM_EnumerateParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  EnumerateOptions opt;
  opt.workers = omp_get_max_threads();
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_knots(n, opt));
  state.counters["workers"] = opt.workers;
}

static void BM_AdmissibleShadows(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int workers = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(admissible_shadows(n, workers));
}

BENCHMARK(BM_EnumerateSerial)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateParallel)->Arg(7)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AdmissibleShadows)->Args({9, 1})->Args({9, 4})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
