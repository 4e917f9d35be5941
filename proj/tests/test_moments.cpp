#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "greynoise/errors.hpp"
#include "greynoise/moments.hpp"

using namespace greynoise;

namespace {

GramMatrix random_psd(int d, std::mt19937_64& rng) {
  auto u = [&] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0; };
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = u();
  }
  return GramMatrix(Eigen::MatrixXd(a.transpose() * a / d));
}

} // namespace

TEST_CASE("worked example gamma = (2,2)") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.7, 16));
  std::mt19937_64 rng(3);
  const GramMatrix g = random_psd(2, rng);
  const MomentResult r = moment(MultiIndex({2, 2}), g, m);
  const double expected = 24.0 * m[2] / 6.0 *
                          (2.0 * g(0, 0) * g(1, 1) + 4.0 * g(0, 1) * g(0, 1));
  CHECK(r.value == doctest::Approx(expected).epsilon(1e-13));
  CHECK(r.solution_count == 2);
  CHECK(r.half_degree == 2);
}

TEST_CASE("gaussian moment is the Isserlis value") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const GramMatrix id2 = GramMatrix::identity(2);
  CHECK(moment(MultiIndex({2, 2}), id2, m).value == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(isserlis_oracle(MultiIndex({2, 2}), id2) == doctest::Approx(1.0));
}

TEST_CASE("odd moments vanish exactly") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.5, 16));
  const GramMatrix id2 = GramMatrix::identity(2);
  CHECK(moment(MultiIndex({1, 2}), id2, m).value == 0.0);
  CHECK(moment(MultiIndex({3}), id2, m).value == 0.0);
  CHECK(coefficient_oracle(MultiIndex({1, 2}), id2, m) == 0.0);
  CHECK(isserlis_oracle(MultiIndex({1, 2}), id2) == 0.0);
}

TEST_CASE("isserlis reference values") {
  const GramMatrix one = GramMatrix::identity(1);
  CHECK(isserlis_oracle(MultiIndex({2}), one) == doctest::Approx(1.0));
  CHECK(isserlis_oracle(MultiIndex({4}), one) == doctest::Approx(3.0));
  for (double rho : {0.0, 0.3, -0.8}) {
    Eigen::MatrixXd g(2, 2);
    g << 1.0, rho, rho, 1.0;
    CHECK(isserlis_oracle(MultiIndex({2, 2}), GramMatrix(std::move(g))) ==
          doctest::Approx(1.0 + 2.0 * rho * rho).epsilon(1e-14));
  }
}

TEST_CASE("moment equals both oracles on a random sweep") {
  const MomentWeights gm = moment_weights(MLFunction::exponential());
  const MomentWeights mm = moment_weights(MLFunction::mittag_leffler(0.7, 16));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 4);
    const GramMatrix g = random_psd(d, rng);
    for (int degree = 0; degree <= 8; ++degree) {
      for (const MultiIndex& gamma : enumerate_graded(d, degree)) {
        const double lhs = moment(gamma, g, mm).value;
        const double coeff = coefficient_oracle(gamma, g, mm);
        CHECK(std::abs(lhs - coeff) <=
              1e-12 * std::max({std::abs(lhs), std::abs(coeff), 1e-2}));
        const double gauss = moment(gamma, g, gm).value;
        const double iss = isserlis_oracle(gamma, g);
        CHECK(std::abs(gauss - iss) <=
              1e-12 * std::max({std::abs(gauss), std::abs(iss), 1e-2}));
      }
    }
  }
}

TEST_CASE("exact rational route equals the oracle symbolically") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(1.0, 16));
  std::vector<std::vector<Rational>> e = {{Rational(2), Rational(1, 3)},
                                          {Rational(1, 3), Rational(1)}};
  const GramMatrix g = GramMatrix::exact(e);
  for (const MultiIndex& gamma :
       {MultiIndex({4, 2}), MultiIndex({2, 2}), MultiIndex({6}), MultiIndex({3, 3})}) {
    CHECK(moment_exact(gamma, g, m) == coefficient_oracle_exact(gamma, g, m));
  }
}

TEST_CASE("radial moments") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  CHECK(radial_moment(2, 1.0, m) == doctest::Approx(3.0).epsilon(1e-14));
  CHECK(radial_moment(0, 5.0, m) == 1.0);
  const MomentWeights mh = moment_weights(MLFunction::mittag_leffler(0.5, 16));
  // 2 m_1 = 1/Gamma(3/2)
  CHECK(radial_moment(1, 1.0, mh) == doctest::Approx(1.1283791671).epsilon(1e-9));
  // consistency with the full moment at gamma = (2n)
  const GramMatrix one = GramMatrix::identity(1);
  for (int n = 0; n <= 5; ++n) {
    CHECK(radial_moment(n, 1.0, mh) ==
          doctest::Approx(moment(MultiIndex({2 * n}), one, mh).value).epsilon(1e-13));
  }
}

TEST_CASE("scaling covariance in the Gram matrix") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.8, 16));
  std::mt19937_64 rng(29);
  const GramMatrix g = random_psd(3, rng);
  const GramMatrix g2 = g.scaled(2.5);
  for (const MultiIndex& gamma : {MultiIndex({2, 1, 1}), MultiIndex({4}), MultiIndex({2, 2, 2})}) {
    const double base = moment(gamma, g, m).value;
    const double scaled = moment(gamma, g2, m).value;
    CHECK(scaled == doctest::Approx(std::pow(2.5, gamma.degree() / 2) * base)
                        .epsilon(1e-12));
  }
}

TEST_CASE("laplace transform values") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  CHECK(laplace_transform(m, 1.0) == doctest::Approx(std::exp(0.5)).epsilon(1e-12));
  CHECK(laplace_transform(m, 0.0) == 1.0);
  const MomentWeights m1 = moment_weights(MLFunction::mittag_leffler(1.0));
  CHECK(laplace_transform(m1, 2.0) == doctest::Approx(std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("degree and dimension limits are enforced") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const GramMatrix id2 = GramMatrix::identity(2);
  CHECK_THROWS_AS(moment(MultiIndex({14}), GramMatrix::identity(1), m, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(moment(MultiIndex({2}), GramMatrix::identity(7), m, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(moment(MultiIndex({1, 1, 1}), id2, m), std::invalid_argument);
}

TEST_CASE("gram matrix validation") {
  Eigen::MatrixXd bad(2, 2);
  bad << 1.0, 0.9, 0.2, 1.0;
  CHECK_THROWS_AS(GramMatrix{bad}, std::invalid_argument);
  Eigen::MatrixXd negdef(2, 2);
  negdef << 1.0, 2.0, 2.0, 1.0;   // eigenvalues 3, -1
  CHECK_THROWS_AS(GramMatrix{negdef}, std::invalid_argument);
}
