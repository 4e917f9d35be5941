#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "greynoise/fockspace.hpp"
#include "greynoise/kondratiev.hpp"

using namespace greynoise;

namespace {

GradedSeries random_series(std::mt19937_64& rng, int terms, int degree, int vars) {
  auto u = [&] { return 2.0 * (static_cast<double>(rng() >> 11) * 0x1p-53) - 1.0; };
  GradedSeries s;
  for (int t = 0; t < terms; ++t) {
    std::vector<int> idx(vars, 0);
    const int n = static_cast<int>(rng() % (degree + 1));
    for (int k = 0; k < n; ++k) ++idx[rng() % vars];
    s.add(MultiIndex(idx), {u(), u()});
  }
  return s;
}

} // namespace

TEST_CASE("weight system defaults and validation") {
  const WeightSystem w = WeightSystem::geometric();
  CHECK(w.a(1) == 2.0);
  CHECK(w.a(3) == 8.0);
  CHECK(w.b(0) == 1.0);
  CHECK(w.b(4) == 16.0);
  CHECK(w.submultiplicative());
  CHECK(w.summable());
  CHECK_THROWS_AS(WeightSystem::geometric(0.5, 2.0, 2), std::invalid_argument);
  CHECK_THROWS_AS(w.a(0), std::invalid_argument);
}

TEST_CASE("hp norm reference values") {
  const WeightSystem w = WeightSystem::geometric();
  CHECK(hp_norm(GradedSeries::unit(), 3, w) == doctest::Approx(1.0));
  // coefficient 1 on z_1 at p = 1: sqrt(2^{-1} 2^{-1}) = 1/2
  const GradedSeries z1 = GradedSeries::monomial(MultiIndex({1}));
  CHECK(hp_norm(z1, 1, w) == doctest::Approx(0.5).epsilon(1e-14));
  // norms decrease in p for weights >= 1
  std::mt19937_64 rng(2);
  const GradedSeries f = random_series(rng, 12, 6, 5);
  CHECK(hp_norm(f, 2, w) <= hp_norm(f, 1, w));
  CHECK(hp_norm(f, 3, w) <= hp_norm(f, 2, w));
  CHECK(hp_norm_squared(f, 2, w) ==
        doctest::Approx(hp_norm(f, 2, w) * hp_norm(f, 2, w)).epsilon(1e-12));
}

TEST_CASE("convolution identities and brute force") {
  std::mt19937_64 rng(8);
  const GradedSeries f = random_series(rng, 20, 6, 4);
  const GradedSeries g = random_series(rng, 20, 6, 4);
  CHECK(convolve(f, GradedSeries::unit()) == f);
  const GradedSeries z1 = GradedSeries::monomial(MultiIndex({1}));
  CHECK(convolve(z1, z1).at(MultiIndex({2})) == std::complex<double>(1.0));
  // nested-loop brute force
  GradedSeries brute;
  for (const auto& [a, fa] : f.coefficients()) {
    for (const auto& [b, gb] : g.coefficients()) {
      brute.add(a.plus(b), fa * gb);
    }
  }
  CHECK(convolve(f, g) == brute);
  // coincides with the Wick product
  CHECK(convolve(f, g) == wick_product(f, g));
}

TEST_CASE("vage constants for the default weights") {
  const WeightSystem w = WeightSystem::geometric();
  const VageConstants c = vage_constant(4, 1, w);
  // product form: prod_j (1 - 8^{-j})^{-1} * sum_n 8^{-n}
  double a_sum = 1.0;
  for (int j = 1; j <= 40; ++j) a_sum /= (1.0 - std::pow(8.0, -j));
  const double b_sum = 1.0 / (1.0 - 1.0 / 8.0);
  CHECK(c.product == doctest::Approx(a_sum * b_sum).epsilon(1e-12));
  CHECK(c.tight <= c.product);
  CHECK(c.tight >= 1.0);
  // p - q = 2 with d = 1 admissible, with d = 2 not
  const WeightSystem w1 = WeightSystem::geometric(2.0, 2.0, 1);
  CHECK_NOTHROW(vage_constant(3, 1, w1));
  CHECK_THROWS_AS(vage_constant(3, 1, w), std::invalid_argument);
}

TEST_CASE("tight constant is a genuine diagonal sum") {
  // independent evaluation of sum_alpha (a_alpha b_{|alpha|})^{-r} by direct
  // enumeration over a finite box, r = 3
  const WeightSystem w = WeightSystem::geometric();
  const VageConstants c = vage_constant(4, 1, w);
  double direct = 0.0;
  // alpha over 6 variables with entries <= 4 (rapidly convergent)
  std::vector<int> alpha(6, 0);
  for (;;) {
    double term = 1.0;
    int degree = 0;
    for (int j = 0; j < 6; ++j) {
      degree += alpha[j];
      term *= std::pow(w.a(j + 1), -3.0 * alpha[j]);
    }
    term *= std::pow(w.b(degree), -3.0);
    direct += term;
    int pos = 0;
    while (pos < 6) {
      if (++alpha[pos] <= 4) break;
      alpha[pos] = 0;
      ++pos;
    }
    if (pos == 6) break;
  }
  CHECK(c.tight == doctest::Approx(direct).epsilon(1e-10));
}

TEST_CASE("vage inequality on the unit and random pairs") {
  const WeightSystem w = WeightSystem::geometric();
  const GradedSeries u = GradedSeries::unit();
  const VageReport unit_rep = verify_vage(u, u, 4, 1, w);
  CHECK(unit_rep.lhs == doctest::Approx(1.0));
  CHECK(unit_rep.rhs >= 1.0);
  CHECK(unit_rep.pass);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const GradedSeries f = random_series(rng, 20, 8, 8);
    const GradedSeries g = random_series(rng, 20, 8, 8);
    CHECK(verify_vage(f, g, 4, 1, w).pass);
  }
}

TEST_CASE("vage stress case: flat degree-one element") {
  const WeightSystem w = WeightSystem::geometric();
  GradedSeries f;
  for (int j = 0; j < 30; ++j) f.add(MultiIndex::unit(j), 1.0);
  const VageReport rep = verify_vage(f, f, 4, 1, w);
  CHECK(rep.pass);
  CHECK(rep.ratio > 0.0);
}

TEST_CASE("constructed weights are supermultiplicative") {
  // d_{n+m, alpha+beta} >= d_{n, alpha} d_{m, beta} on random samples
  const WeightSystem w = WeightSystem::geometric();
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<int> a(4, 0), b(4, 0);
    const int n = static_cast<int>(rng() % 5), mm = static_cast<int>(rng() % 5);
    for (int k = 0; k < n; ++k) ++a[rng() % 4];
    for (int k = 0; k < mm; ++k) ++b[rng() % 4];
    auto weight = [&](const std::vector<int>& idx, int degree) {
      double v = w.b(degree);
      for (int j = 0; j < 4; ++j) v *= std::pow(w.a(j + 1), idx[j]);
      return v;
    };
    std::vector<int> sum(4);
    for (int j = 0; j < 4; ++j) sum[j] = a[j] + b[j];
    CHECK(weight(sum, n + mm) >= weight(a, n) * weight(b, mm) * (1.0 - 1e-12));
  }
}
