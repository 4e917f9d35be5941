#include <benchmark/benchmark.h>

#include "greynoise/process.hpp"

using namespace greynoise;

static void BM_HermiteBatch(benchmark::State& state) {
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_fn_all(jmax, 1.7));
  }
}
BENCHMARK(BM_HermiteBatch)->RangeMultiplier(4)->Range(16, 4096);

static void BM_HermiteIntegralsRecurrence(benchmark::State& state) {
  const int jmax = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_integrals_upto(jmax, 2.5));
  }
}
BENCHMARK(BM_HermiteIntegralsRecurrence)->RangeMultiplier(4)->Range(16, 4096);

static void BM_HermiteIntegralQuadrature(benchmark::State& state) {
  const int j = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermite_integral(j, 2.5));
  }
}
BENCHMARK(BM_HermiteIntegralQuadrature)->RangeMultiplier(4)->Range(4, 256);
