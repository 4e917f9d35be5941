#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "greynoise/errors.hpp"
#include "greynoise/orthopoly.hpp"

using namespace greynoise;

TEST_CASE("moment matrix of the gaussian monomials in one variable") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const Eigen::MatrixXd g = chaos_moment_matrix(1, 2, GramMatrix::identity(1), m, {});
  Eigen::MatrixXd expected(3, 3);
  expected << 1, 0, 1, 0, 1, 0, 1, 0, 3;
  CHECK((g - expected).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("entry (0,0) is the total mass for any phi") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.6, 16));
  const Eigen::MatrixXd g = chaos_moment_matrix(2, 1, GramMatrix::identity(2), m, {});
  CHECK(g(0, 0) == doctest::Approx(1.0));
}

TEST_CASE("one-variable mittag-leffler gram at degree 1") {
  const double alpha = 0.7;
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(alpha, 16));
  const Eigen::MatrixXd g = chaos_moment_matrix(1, 1, GramMatrix::identity(1), m, {});
  CHECK(g(0, 1) == doctest::Approx(0.0));
  // <Q, Q> = 2 m_1 = 1/Gamma(alpha+1)
  CHECK(g(1, 1) == doctest::Approx(2.0 * m[1]).epsilon(1e-14));
}

TEST_CASE("gaussian one-variable basis is normalized Hermite") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const ChaosBasis basis = orthonormal_basis(1, 4, GramMatrix::identity(1), m);
  // constant
  CHECK(basis.coeffs(0, 0) == doctest::Approx(1.0));
  // degree 2: (Q^2 - 1)/sqrt(2)
  const int i2 = basis.index_of(MultiIndex({2}));
  CHECK(basis.coeffs(i2, basis.index_of(MultiIndex())) ==
        doctest::Approx(-1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(basis.coeffs(i2, basis.index_of(MultiIndex({2}))) ==
        doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-12));
  CHECK(basis.coeffs(i2, basis.index_of(MultiIndex({1}))) ==
        doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("gaussian two-variable cross term is already orthonormal") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const ChaosBasis basis = orthonormal_basis(2, 2, GramMatrix::identity(2), m);
  const int i11 = basis.index_of(MultiIndex({1, 1}));
  for (std::size_t c = 0; c < basis.indices.size(); ++c) {
    const double expected = (static_cast<int>(c) == i11) ? 1.0 : 0.0;
    CHECK(basis.coeffs(i11, c) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("recomputed gram is the identity for a non-gaussian phi") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.5, 24));
  const ChaosBasis basis = orthonormal_basis(2, 4, GramMatrix::identity(2), m);
  const Eigen::MatrixXd g = recompute_basis_gram(basis);
  CHECK((g - Eigen::MatrixXd::Identity(g.rows(), g.cols())).cwiseAbs().maxCoeff() <
        1e-8);
}

TEST_CASE("change of basis is graded-lex triangular with positive diagonal") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.8, 24));
  const ChaosBasis basis = orthonormal_basis(2, 3, GramMatrix::identity(2), m);
  for (std::size_t i = 0; i < basis.indices.size(); ++i) {
    CHECK(basis.coeffs(i, i) > 0.0);
    for (std::size_t c = i + 1; c < basis.indices.size(); ++c) {
      CHECK(basis.coeffs(i, c) == 0.0);
    }
  }
}

TEST_CASE("degenerate test-function configuration is rejected") {
  // duplicated test function: rank-deficient Gram
  Eigen::MatrixXd g(2, 2);
  g << 1.0, 1.0, 1.0, 1.0;
  const MomentWeights m = moment_weights(MLFunction::exponential());
  CHECK_THROWS_AS(orthonormal_basis(2, 2, GramMatrix(std::move(g)), m),
                  std::invalid_argument);
}

TEST_CASE("gaussian recurrence scalars") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const ChaosBasis basis = orthonormal_basis(1, 5, GramMatrix::identity(1), m);
  for (int level = 0; level <= 4; ++level) {
    const RecurrenceBlocks blocks = recurrence_blocks(basis, 0, level);
    CHECK(blocks.a(0, 0) == doctest::Approx(std::sqrt(level + 1.0)).epsilon(1e-10));
    CHECK(std::abs(blocks.b(0, 0)) < 1e-10);
    if (level > 0) {
      CHECK(blocks.c(0, 0) ==
            doctest::Approx(std::sqrt(static_cast<double>(level))).epsilon(1e-10));
    }
    CHECK(blocks.residual < 1e-8);
  }
}

TEST_CASE("B vanishes and C is the transpose of the previous A") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.5, 24));
  const ChaosBasis basis = orthonormal_basis(2, 4, GramMatrix::identity(2), m);
  for (int level = 1; level <= 3; ++level) {
    for (int j = 0; j < 2; ++j) {
      const RecurrenceBlocks cur = recurrence_blocks(basis, j, level);
      const RecurrenceBlocks prev = recurrence_blocks(basis, j, level - 1);
      CHECK(cur.b.cwiseAbs().maxCoeff() < 1e-10);
      CHECK((cur.c - prev.a.transpose()).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("three-term reconstruction has small residual") {
  const MomentWeights m = moment_weights(MLFunction::mittag_leffler(0.8, 24));
  const ChaosBasis basis = orthonormal_basis(3, 4, GramMatrix::identity(3), m);
  for (int level = 0; level <= 3; ++level) {
    for (int j = 0; j < 3; ++j) {
      CHECK(recurrence_blocks(basis, j, level).residual < 1e-8);
    }
  }
}

TEST_CASE("p-phi exponential: gaussian reproduces hermite generating function") {
  const MomentWeights m = moment_weights(MLFunction::exponential());
  const PphiExpansion e = pphi_exponential_coeffs(m, 10);
  CHECK(e.agree);
  // n = 0: 1
  CHECK(e.division[0][0] == Rational(1));
  // n = 1: Q (no degree-0 correction)
  CHECK(e.division[1][0] == Rational(1));
  // n = 3 at sigma = 1: (Q^3 - 3Q)/6
  CHECK(e.division[3][0] == Rational(1, 6));
  CHECK(e.division[3][1] == Rational(-1, 2));
  // full table against exp(tQ - t^2 sigma/2)
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      Rational expected = Rational(1) / Rational(factorial(k) * factorial(n - 2 * k));
      for (int i = 0; i < k; ++i) expected /= Rational(-2);
      CHECK(e.division[n][k] == expected);
    }
  }
}

TEST_CASE("p-phi exponential routes agree for non-gaussian weights") {
  std::vector<Rational> taylor(24);
  Rational f = 1;
  for (int k = 0; k < 24; ++k) {
    if (k > 0) f /= k;
    taylor[k] = f * f;
  }
  const MomentWeights m = moment_weights(MLFunction::custom_exact(taylor));
  const PphiExpansion e = pphi_exponential_coeffs(m, 10);
  CHECK(e.agree);
  // n = 1 is always the bare coordinate
  CHECK(e.division[1].size() == 1);
  CHECK(e.division[1][0] == Rational(1));
}

TEST_CASE("p-phi exponential requires exact weights and bounded order") {
  const MomentWeights inexact = moment_weights(MLFunction::mittag_leffler(0.5, 16));
  CHECK_THROWS_AS(pphi_exponential_coeffs(inexact, 5), std::invalid_argument);
  const MomentWeights m = moment_weights(MLFunction::exponential());
  CHECK_THROWS_AS(pphi_exponential_coeffs(m, 25), std::invalid_argument);
}
