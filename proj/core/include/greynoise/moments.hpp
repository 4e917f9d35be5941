#pragma once

#include <Eigen/Dense>
#include <optional>
#include <vector>

#include "greynoise/mlfun.hpp"
#include "greynoise/multiindex.hpp"
#include "greynoise/series.hpp"

namespace greynoise {

// Pairwise L2 inner products <s_i, s_j> of the test functions entering the
// coordinate variables. Symmetric, positive semidefinite.
class GramMatrix {
public:
  explicit GramMatrix(Eigen::MatrixXd g);
  static GramMatrix identity(int d);
  // exact rational entries (row-major, symmetric); enables the rational mode
  static GramMatrix exact(std::vector<std::vector<Rational>> entries);

  int dimension() const { return static_cast<int>(g_.rows()); }
  double operator()(int i, int j) const { return g_(i, j); }
  const Eigen::MatrixXd& matrix() const { return g_; }
  double min_eigenvalue() const { return min_eig_; }

  bool has_exact() const { return exact_.has_value(); }
  const Rational& exact_entry(int i, int j) const;

  GramMatrix scaled(double c) const;

private:
  GramMatrix() = default;
  Eigen::MatrixXd g_;
  double min_eig_ = 0.0;
  std::optional<std::vector<std::vector<Rational>>> exact_;
};

struct MomentResult {
  double value = 0.0;
  int half_degree = 0;        // n with |gamma| = 2n (0 for odd input)
  long solution_count = 0;    // Diophantine solutions used
};

struct MomentLimits {
  int max_degree = 12;
  int max_dimension = 6;
};

// E[Q^gamma] by the closed moment formula: zero for odd |gamma|, otherwise
//   (2n)! m_n * Num / Den
// with Num and Den summed over the Diophantine solutions. Refuses degrees
// and dimensions beyond the configured limits.
MomentResult moment(const MultiIndex& gamma, const GramMatrix& g,
                    const MomentWeights& m, const MomentLimits& limits = {});

// The phi-independent factor (2n)! * Num / Den as an exact rational, so that
// E[Q^gamma] = multiplier * m_n. Requires a Gram matrix with exact entries.
Rational moment_multiplier_exact(const MultiIndex& gamma, const GramMatrix& g,
                                 const MomentLimits& limits = {});

// Exact moment when both the Gram matrix and the weights carry rationals.
Rational moment_exact(const MultiIndex& gamma, const GramMatrix& g,
                      const MomentWeights& m, const MomentLimits& limits = {});

// Diophantine denominator sum_beta (n choose beta) prod 2^{beta_ij (1-delta)}
// as an exact integer; equals (2n)! / prod gamma_j! (identity under test).
BigInt moment_denominator(const MultiIndex& gamma);

// E[Q_s^{2n}] = (2n)! m_n <s,s>^n
double radial_moment(int n, double s_norm_sq, const MomentWeights& m);
Rational radial_moment_exact(int n, const Rational& s_norm_sq, const MomentWeights& m);

// L(s) restricted along a ray: sum_n m_n (|s|^2)^n with a ratio-test tail
// estimate; throws accuracy_error when the tail does not pass.
double laplace_transform(const MomentWeights& m, double s_norm_sq);

// Independent Gaussian oracle (phi = exp only): sum over perfect matchings
// of the expanded variable list of products of Gram entries.
double isserlis_oracle(const MultiIndex& gamma, const GramMatrix& g);

// Algebraically independent route to the same moment:
//   E[Q^gamma] = (prod gamma_j!) m_n [t^gamma] (sum_{i,j} g_ij t_i t_j)^n
// by exact symbolic expansion of the quadratic form power.
double coefficient_oracle(const MultiIndex& gamma, const GramMatrix& g,
                          const MomentWeights& m);
Rational coefficient_oracle_exact(const MultiIndex& gamma, const GramMatrix& g,
                                  const MomentWeights& m);

} // namespace greynoise
