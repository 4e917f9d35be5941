#include <benchmark/benchmark.h>

#include <random>

#include "greynoise/moments.hpp"

using namespace greynoise;

namespace {

GramMatrix make_gram(int d) {
  std::mt19937_64 rng(42);
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      a(i, j) = 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0;
    }
  }
  return GramMatrix(Eigen::MatrixXd(a.transpose() * a / d));
}

} // namespace

static void BM_MomentByDegree(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const GramMatrix g = make_gram(4);
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.7, 16));
  std::vector<int> entries(4, 0);
  for (int k = 0; k < degree; ++k) ++entries[k % 4];
  const MultiIndex gamma(entries);
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment(gamma, g, m).value);
  }
}
BENCHMARK(BM_MomentByDegree)->DenseRange(2, 12, 2);

static void BM_CoefficientOracle(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const GramMatrix g = make_gram(4);
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.7, 16));
  std::vector<int> entries(4, 0);
  for (int k = 0; k < degree; ++k) ++entries[k % 4];
  const MultiIndex gamma(entries);
  for (auto _ : state) {
    benchmark::DoNotOptimize(coefficient_oracle(gamma, g, m));
  }
}
BENCHMARK(BM_CoefficientOracle)->DenseRange(2, 10, 2);

static void BM_IsserlisOracle(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  const GramMatrix g = make_gram(4);
  std::vector<int> entries(4, 0);
  for (int k = 0; k < degree; ++k) ++entries[k % 4];
  const MultiIndex gamma(entries);
  for (auto _ : state) {
    benchmark::DoNotOptimize(isserlis_oracle(gamma, g));
  }
}
BENCHMARK(BM_IsserlisOracle)->DenseRange(2, 10, 2);
