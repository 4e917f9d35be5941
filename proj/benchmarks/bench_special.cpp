#include <benchmark/benchmark.h>

#include "greynoise/marginals.hpp"
#include "greynoise/special.hpp"

using namespace greynoise;

static void BM_MittagLefflerNegTaylor(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler_neg(0.5, 1.5));
  }
}
BENCHMARK(BM_MittagLefflerNegTaylor);

static void BM_MittagLefflerNegIntegral(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler_neg(0.5, 20.0));
  }
}
BENCHMARK(BM_MittagLefflerNegIntegral);

static void BM_MittagLefflerNegAsymptotic(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(mittag_leffler_neg(0.5, 1e4));
  }
}
BENCHMARK(BM_MittagLefflerNegAsymptotic);

static void BM_Density1D(benchmark::State& state) {
  const MLFunction phi = MLFunction::mittag_leffler(0.5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(density_1d(phi).total_mass);
  }
}
BENCHMARK(BM_Density1D);

BENCHMARK_MAIN();
