#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "greynoise/errors.hpp"
#include "greynoise/marginals.hpp"
#include "greynoise/moments.hpp"

using namespace greynoise;

TEST_CASE("gaussian density matches the closed form") {
  const MarginalDensity1D d = density_1d(MLFunction::exponential());
  CHECK(d.total_mass == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(d.value_at(0.0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-9));
  double worst = 0.0;
  for (double x = -6.0; x <= 6.0; x += 0.05) {
    const double expected = std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI);
    worst = std::max(worst, std::abs(d.value_at(x) - expected));
  }
  CHECK(worst < 1e-6);
}

TEST_CASE("densities are even and nonnegative") {
  for (const MLFunction& phi :
       {MLFunction::exponential(), MLFunction::mittag_leffler(0.5),
        MLFunction::mittag_leffler(0.8)}) {
    const MarginalDensity1D d = density_1d(phi);
    CHECK(d.total_mass == doctest::Approx(1.0).epsilon(2e-6));
    for (std::size_t k = 0; k < d.size(); ++k) {
      CHECK(d.values[k] >= 0.0);
      CHECK(d.values[k] ==
            doctest::Approx(d.values[d.size() - 1 - k]).epsilon(1e-9));
    }
  }
}

TEST_CASE("grey-noise second moment against the closed radial form") {
  const MLFunction phi = MLFunction::mittag_leffler(0.5);
  const MomentWeights m = moment_weights(phi);
  const double quad = moment_quadrature_1d(phi, 1);
  CHECK(quad == doctest::Approx(radial_moment(1, 1.0, m)).epsilon(1e-3));
  // 1/Gamma(3/2)
  CHECK(quad == doctest::Approx(1.1283791671).epsilon(1e-3));
}

TEST_CASE("moment quadrature normalization and gaussian values") {
  const MLFunction phi = MLFunction::exponential();
  CHECK(moment_quadrature_1d(phi, 0) == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(moment_quadrature_1d(phi, 2) == doctest::Approx(3.0).epsilon(1e-4));
}

TEST_CASE("moment quadrature matches radial moments across phis and orders") {
  for (const MLFunction& phi :
       {MLFunction::exponential(), MLFunction::mittag_leffler(0.5),
        MLFunction::mittag_leffler(0.8)}) {
    const MomentWeights m = moment_weights(phi);
    for (int n = 0; n <= 4; ++n) {
      const double closed = radial_moment(n, 1.0, m);
      CHECK(moment_quadrature_1d(phi, n) ==
            doctest::Approx(closed).epsilon(1e-3));
    }
  }
}

TEST_CASE("window failure for a non-decaying characteristic function") {
  // compose(exp, exp) tends to exp(-1): atomic component, no density
  const MLFunction comp =
      MLFunction::compose(MLFunction::exponential(), MLFunction::exponential());
  CHECK_THROWS_AS(density_1d(comp), accuracy_error);
}

TEST_CASE("sampling statistics") {
  const MarginalDensity1D d = density_1d(MLFunction::exponential());
  const auto xs = sample_1d(d, 100000, 42);
  REQUIRE(xs.size() == 100000);
  double mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  var /= static_cast<double>(xs.size() - 1);
  // variance of the standard normal within a generous 3-sigma band
  CHECK(std::abs(var - 1.0) < 3.0 * std::sqrt(2.0 / 100000.0));
  // symmetric density: median near zero
  std::vector<double> sorted = xs;
  std::sort(sorted.begin(), sorted.end());
  CHECK(std::abs(sorted[sorted.size() / 2]) < 1e-2);
}

TEST_CASE("sampling is deterministic per seed") {
  const MarginalDensity1D d = density_1d(MLFunction::mittag_leffler(0.8));
  const auto a = sample_1d(d, 1000, 7);
  const auto b = sample_1d(d, 1000, 7);
  const auto c = sample_1d(d, 1000, 8);
  CHECK(a == b);
  CHECK(a != c);
}

TEST_CASE("kolmogorov-smirnov against the integrated density") {
  const MarginalDensity1D d = density_1d(MLFunction::mittag_leffler(0.5));
  const std::size_t n = 100000;
  auto xs = sample_1d(d, n, 1234);
  std::sort(xs.begin(), xs.end());
  // cdf on the grid
  std::vector<double> cdf(d.size(), 0.0);
  for (std::size_t k = 1; k < d.size(); ++k) {
    cdf[k] = cdf[k - 1] + 0.5 * (d.values[k - 1] + d.values[k]) * d.dx();
  }
  for (double& c : cdf) c /= cdf.back();
  auto cdf_at = [&](double x) {
    if (x <= d.x_min) return 0.0;
    if (x >= d.x_max) return 1.0;
    const double t = (x - d.x_min) / d.dx();
    const std::size_t k = std::min(static_cast<std::size_t>(t), d.size() - 2);
    const double frac = t - static_cast<double>(k);
    return cdf[k] * (1.0 - frac) + cdf[k + 1] * frac;
  };
  double ks = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = cdf_at(xs[i]);
    ks = std::max(ks, std::abs(f - static_cast<double>(i + 1) / n));
    ks = std::max(ks, std::abs(f - static_cast<double>(i) / n));
  }
  CHECK(ks < 1.63 / std::sqrt(static_cast<double>(n)));   // 1% level
}

TEST_CASE("two-dimensional radial marginal at the gaussian point") {
  const MLFunction phi = MLFunction::exponential();
  for (double r : {0.0, 0.5, 1.0, 2.0}) {
    CHECK(density_2d_radial(phi, r) ==
          doctest::Approx(std::exp(-0.5 * r * r) / (2.0 * M_PI)).epsilon(1e-9));
  }
}

TEST_CASE("grid spec validation") {
  GridSpec bad;
  bad.points = 100;   // even
  CHECK_THROWS_AS(density_1d(MLFunction::exponential(), bad), std::invalid_argument);
}
