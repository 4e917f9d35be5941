#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greynoise/special.hpp"

using namespace greynoise;

TEST_CASE("gamma agrees with known values") {
  CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-14));
  CHECK(gamma_fn(0.5) == doctest::Approx(std::sqrt(M_PI)).epsilon(1e-14));
  CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * std::sqrt(M_PI)).epsilon(1e-14));
  // reflection below zero
  CHECK(gamma_fn(-0.5) == doctest::Approx(-2.0 * std::sqrt(M_PI)).epsilon(1e-13));
  CHECK_THROWS_AS(gamma_fn(0.0), std::invalid_argument);
  CHECK_THROWS_AS(gamma_fn(-3.0), std::invalid_argument);
}

TEST_CASE("lanczos vs stirling oracle vs library") {
  for (double x : {0.7, 1.3, 2.5, 4.2, 7.9, 11.5, 20.0, 41.3}) {
    const double primary = gamma_fn(x);
    CHECK(std::abs(primary - gamma_stirling_oracle(x)) / primary < 1e-10);
    CHECK(std::abs(primary - std::tgamma(x)) / primary < 1e-12);
  }
}

TEST_CASE("reciprocal gamma handles the poles") {
  CHECK(reciprocal_gamma(0.0) == 0.0);
  CHECK(reciprocal_gamma(-2.0) == 0.0);
  CHECK(reciprocal_gamma(3.0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("mittag-leffler on the negative axis: alpha = 1 is the exponential") {
  for (double t : {0.0, 0.5, 3.0, 40.0}) {
    CHECK(mittag_leffler_neg(1.0, t) == doctest::Approx(std::exp(-t)).epsilon(1e-14));
  }
}

TEST_CASE("mittag-leffler alpha = 1/2 matches the erfc identity") {
  // E_{1/2}(-t) = exp(t^2) erfc(t), via the scaled complement for large t
  for (double t : {0.1, 0.7, 1.0, 2.5, 5.0, 7.5}) {
    const double expected = std::exp(t * t) * std::erfc(t);
    CHECK(mittag_leffler_neg(0.5, t) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("mittag-leffler route crossovers are seamless") {
  // Taylor / integral / asymptotic switch points
  for (double alpha : {0.3, 0.5, 0.8, 0.95}) {
    for (double t : {0.99, 1.01, 7.9, 8.1}) {
      const double a = mittag_leffler_neg(alpha, t * 0.9999);
      const double b = mittag_leffler_neg(alpha, t * 1.0001);
      CHECK(std::abs(a - b) / a < 1e-3);   // continuity across the switch
    }
  }
  // Taylor vs integral on both sides of the handoff, directly
  for (double alpha : {0.3, 0.5, 0.8}) {
    const double below = mittag_leffler_neg(alpha, 0.999);
    const double above = mittag_leffler_neg(alpha, 1.001);
    CHECK(std::abs(below - above) / below < 2e-3);
  }
}

TEST_CASE("mittag-leffler large-argument asymptote") {
  for (double alpha : {0.3, 0.5, 0.8}) {
    const double t = 1e6;
    const double lead = 1.0 / (gamma_fn(1.0 - alpha) * t);
    CHECK(mittag_leffler_neg(alpha, t) == doctest::Approx(lead).epsilon(1e-5));
  }
}

TEST_CASE("mittag-leffler negative axis is completely monotone in t") {
  double prev = 1.0;
  for (double t = 0.25; t <= 64.0; t *= 2.0) {
    const double v = mittag_leffler_neg(0.7, t);
    CHECK(v > 0.0);
    CHECK(v < prev);
    prev = v;
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(mittag_leffler_neg(0.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mittag_leffler_neg(1.5, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(mittag_leffler_neg(0.5, -1.0), std::invalid_argument);
}
