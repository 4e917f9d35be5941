#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greynoise/process.hpp"

using namespace greynoise;

TEST_CASE("hermite function point values") {
  CHECK(hermite_fn(0, 0.0) == doctest::Approx(std::pow(M_PI, -0.25)).epsilon(1e-14));
  CHECK(hermite_fn(1, 0.0) == 0.0);
  // odd functions vanish at zero
  for (int j = 1; j <= 21; j += 2) CHECK(hermite_fn(j, 0.0) == 0.0);
  // parity
  for (int j = 0; j <= 8; ++j) {
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    CHECK(hermite_fn(j, -1.3) ==
          doctest::Approx(sign * hermite_fn(j, 1.3)).epsilon(1e-13));
  }
}

TEST_CASE("recurrence residual is tiny pointwise") {
  for (double t : {-3.0, -0.5, 0.0, 1.2, 4.7}) {
    const auto z = hermite_fn_all(20, t);
    for (int j = 1; j < 20; ++j) {
      const double lhs = std::sqrt(2.0 / (j + 1)) * t * z[j] -
                         std::sqrt(static_cast<double>(j) / (j + 1)) * z[j - 1];
      CHECK(std::abs(lhs - z[j + 1]) < 1e-10);
    }
  }
}

TEST_CASE("deep-underflow starts still produce finite large-degree values") {
  // zeta_0(40) underflows in plain double, yet zeta_500(40) is well-defined
  const double v = hermite_fn(500, 40.0);
  CHECK(std::isfinite(v));
  CHECK(std::abs(v) > 1e-90);
  CHECK(std::abs(v) < 1.0);
  // oscillatory-region values stay order one
  CHECK(std::abs(hermite_fn(500, 10.0)) > 1e-3);
}

TEST_CASE("gauss-hermite orthonormality") {
  const GaussHermiteRule rule = gauss_hermite(40);
  for (int i = 0; i <= 30; i += 5) {
    for (int j = 0; j <= 30; j += 5) {
      const double expected = (i == j) ? 1.0 : 0.0;
      CHECK(hermite_l2_inner(i, j, rule) ==
            doctest::Approx(expected).epsilon(1e-8));
    }
  }
  CHECK(hermite_l2_inner(3, 3, rule) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("hermite integral values and cross-checks") {
  CHECK(hermite_integral(5, 0.0) == 0.0);
  // j = 0 at a large argument approaches pi^{-1/4} sqrt(pi/2)
  const double limit = std::pow(M_PI, -0.25) * std::sqrt(0.5 * M_PI);
  CHECK(hermite_integral(0, 8.0) == doctest::Approx(limit).epsilon(1e-9));
  // quadrature vs the neighbor-derivative recurrence
  for (double t : {0.5, 1.0, 2.3}) {
    const auto rec = hermite_integrals_upto(12, t);
    for (int j = 0; j <= 12; ++j) {
      CHECK(hermite_integral(j, t) == doctest::Approx(rec[j]).epsilon(1e-9));
    }
  }
  // odd j closed form: Int_0^t zeta_1 = sqrt(2) pi^{-1/4} (1 - exp(-t^2/2))
  const double expected =
      std::sqrt(2.0) * std::pow(M_PI, -0.25) * (1.0 - std::exp(-0.5));
  CHECK(hermite_integral(1, 1.0) == doctest::Approx(expected).epsilon(1e-10));
}

TEST_CASE("hermite bounds fit passes at small scale") {
  const HermiteBoundsReport rep = verify_hermite_bounds(60);
  CHECK(rep.pass);
  CHECK(rep.c_osc > 0.0);
  CHECK(rep.gamma_decay > 0.0);
  CHECK(rep.a_sup <= std::pow(M_PI, -0.25) * 1.01);
  CHECK_THROWS_AS(verify_hermite_bounds(501), std::invalid_argument);
}

TEST_CASE("process element basics") {
  const MLFunction phi = MLFunction::exponential();
  const ProcessElement at0 = process_element(0.0, 50, phi);
  for (const auto& [idx, c] : at0.series.coefficients()) {
    CHECK(std::abs(c) == 0.0);
  }
  // coefficients are the hermite integrals over sqrt(c_1)
  const ProcessElement at1 = process_element(1.0, 10, phi);
  const auto integrals = hermite_integrals_upto(9, 1.0);
  for (int j = 0; j < 10; ++j) {
    CHECK(at1.series.at(MultiIndex::unit(j)).real() ==
          doctest::Approx(integrals[j]).epsilon(1e-13));
  }
  // non-gaussian scaling: coefficients differ by sqrt(c1 ratio) only
  const MLFunction ml = MLFunction::mittag_leffler(0.5, 24);
  const ProcessElement ml1 = process_element(1.0, 10, ml);
  const double ratio = std::sqrt(phi.coefficient(1) / ml.coefficient(1));
  for (int j = 0; j < 10; ++j) {
    const double a = ml1.series.at(MultiIndex::unit(j)).real();
    const double b = at1.series.at(MultiIndex::unit(j)).real();
    if (std::abs(b) > 1e-14) {
      CHECK(a / b == doctest::Approx(1.0 / ratio * std::sqrt(1.0)).epsilon(1e-10));
    }
  }
}

TEST_CASE("noise element parity at zero") {
  const MLFunction phi = MLFunction::exponential();
  const ProcessElement n0 = noise_element(0.0, 20, phi);
  for (int j = 1; j < 20; j += 2) {
    CHECK(n0.series.at(MultiIndex::unit(j)) == std::complex<double>(0.0));
  }
  // H_1 membership: the degree-1 norm is finite and bounded by the flat sum
  const WeightSystem w = WeightSystem::geometric();
  const double norm = hp_norm(noise_element(0.7, 60, phi).series, 1, w);
  CHECK(std::isfinite(norm));
  CHECK(norm > 0.0);
}

TEST_CASE("isometry partial sums converge at the measured square-root rate") {
  // the truncation deficit of the indicator expansion decays like J^{-1/2};
  // verify monotone approach and the empirical rate constant
  std::vector<int> js = {200, 400, 800, 1600};
  std::vector<double> deficits;
  for (int J : js) {
    const auto c = hermite_integrals_upto(J - 1, 1.0);
    double sum = 0.0;
    for (int j = 0; j < J; ++j) sum += c[j] * c[j];
    deficits.push_back(1.0 - sum);
  }
  for (std::size_t i = 0; i + 1 < deficits.size(); ++i) {
    CHECK(deficits[i] > deficits[i + 1]);
    CHECK(deficits[i + 1] > 0.0);
  }
  for (std::size_t i = 0; i < deficits.size(); ++i) {
    const double scaled = deficits[i] * std::sqrt(static_cast<double>(js[i]));
    CHECK(scaled > 0.3);
    CHECK(scaled < 0.6);
  }
  // cross-covariance approaches min(t, s) at the same rate
  const auto a = hermite_integrals_upto(1599, 1.0);
  const auto b = hermite_integrals_upto(1599, 2.0);
  double cov = 0.0;
  for (int j = 0; j < 1600; ++j) cov += a[j] * b[j];
  CHECK(cov == doctest::Approx(1.0).epsilon(8e-3));
}

TEST_CASE("difference quotient decays linearly in h") {
  const MLFunction phi = MLFunction::exponential();
  const WeightSystem w = WeightSystem::geometric();
  double prev = -1.0;
  std::vector<double> errs;
  for (double h : {1e-1, 1e-2, 1e-3, 1e-4}) {
    const double err = diff_quotient_error(1.0, h, 80, phi, w, 1);
    errs.push_back(err);
    if (prev > 0.0) {
      // halving h should roughly halve the error: slope near one
      const double slope = std::log(prev / err) / std::log(10.0);
      CHECK(slope > 0.9);
      CHECK(slope < 1.1);
    }
    prev = err;
  }
  // parity: error(t, h) = error(-t, -h)
  const double e1 = diff_quotient_error(0.8, 1e-3, 60, phi, w, 1);
  const double e2 = diff_quotient_error(-0.8, -1e-3, 60, phi, w, 1);
  CHECK(e1 == doctest::Approx(e2).epsilon(1e-10));
}

TEST_CASE("wick riemann integral of the unit integrand") {
  const MLFunction phi = MLFunction::exponential();
  const int J = 40;
  const GradedSeries integral =
      wick_riemann_integral([](double) { return GradedSeries::unit(); }, 512, J, phi);
  const auto expected = hermite_integrals_upto(J - 1, 1.0);
  for (int j = 0; j < J; ++j) {
    CHECK(integral.at(MultiIndex::unit(j)).real() ==
          doctest::Approx(expected[j]).epsilon(5e-4));
  }
  // zero integrand gives the zero element
  const GradedSeries zero =
      wick_riemann_integral([](double) { return GradedSeries(); }, 16, J, phi);
  CHECK(zero.empty());
}

TEST_CASE("wick riemann refinement is cauchy in the algebra norm") {
  const MLFunction phi = MLFunction::exponential();
  const WeightSystem w = WeightSystem::geometric();
  auto f = [](double t) {
    GradedSeries s = GradedSeries::unit();
    s.add(MultiIndex::unit(0), std::complex<double>(t, 0.0));
    return s;
  };
  double prev_diff = -1.0;
  GradedSeries prev;
  for (int mesh = 16; mesh <= 512; mesh *= 2) {
    const GradedSeries cur = wick_riemann_integral(f, mesh, 30, phi);
    if (!prev.empty()) {
      const double diff = hp_norm(cur.minus(prev), 1, w);
      if (prev_diff >= 0.0) CHECK(diff < prev_diff);
      prev_diff = diff;
    }
    prev = cur;
  }
  CHECK(prev_diff < 1e-4);
}
