#include <benchmark/benchmark.h>

#include <random>

#include "greynoise/kondratiev.hpp"

using namespace greynoise;

namespace {

GradedSeries make_series(int terms, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  GradedSeries s;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(8, 0);
    const int degree = static_cast<int>(rng() % 9);
    for (int k = 0; k < degree; ++k) ++idx[rng() % 8];
    s.add(MultiIndex(idx),
          {static_cast<double>(rng() >> 11) * 0x1p-53, 0.0});
  }
  return s;
}

} // namespace

static void BM_Convolve(benchmark::State& state) {
  const int terms = static_cast<int>(state.range(0));
  const GradedSeries f = make_series(terms, 1);
  const GradedSeries g = make_series(terms, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(convolve(f, g));
  }
}
BENCHMARK(BM_Convolve)->RangeMultiplier(2)->Range(8, 128);

static void BM_HpNorm(benchmark::State& state) {
  const GradedSeries f = make_series(static_cast<int>(state.range(0)), 3);
  const WeightSystem w = WeightSystem::geometric();
  for (auto _ : state) {
    benchmark::DoNotOptimize(hp_norm(f, 4, w));
  }
}
BENCHMARK(BM_HpNorm)->RangeMultiplier(4)->Range(8, 512);
