#pragma once

#include <Eigen/Dense>
#include <vector>

#include "greynoise/moments.hpp"

namespace greynoise {

// Orthonormal polynomial chaos over the coordinate variables, built by
// graded Gram-Schmidt against the moment inner product. Row i of `coeffs`
// expresses the i-th orthonormal polynomial over the monomial family in
// graded-lex order; the matrix is lower triangular with positive diagonal.
struct ChaosBasis {
  int dimension = 0;
  int max_degree = 0;
  std::vector<MultiIndex> indices;      // graded-lex, all degrees <= max_degree
  Eigen::MatrixXd coeffs;               // change of basis, lower triangular
  Eigen::MatrixXd moment_matrix;        // <Q^gamma, Q^delta> on `indices`

  int index_of(const MultiIndex& gamma) const;
  std::vector<int> level(int degree) const;   // positions with |gamma| = degree
};

// Moment matrix of the monomials Q^gamma for |gamma|, |delta| <= N.
Eigen::MatrixXd chaos_moment_matrix(int d, int N, const GramMatrix& g,
                                    const MomentWeights& m,
                                    const MomentLimits& limits);

// Graded-lex modified Gram-Schmidt with one reorthogonalization pass.
// Throws std::invalid_argument when the moment matrix is numerically
// singular (degenerate test-function configuration).
ChaosBasis orthonormal_basis(int d, int N, const GramMatrix& g,
                             const MomentWeights& m,
                             const MomentLimits& limits = {.max_degree = 12,
                                                           .max_dimension = 6});

// Gram matrix of the constructed basis recomputed from moments; identity up
// to the orthogonalization tolerance.
Eigen::MatrixXd recompute_basis_gram(const ChaosBasis& basis);

// Blocks of the three-term recurrence Q_j P_N = A P_{N+1} + B P_N + C P_{N-1}
// acting on the orthonormal levels. Row index: gamma at level N; column
// index: delta at the target level.
struct RecurrenceBlocks {
  Eigen::MatrixXd a;   // level N -> N+1
  Eigen::MatrixXd b;   // level N -> N
  Eigen::MatrixXd c;   // level N -> N-1 (empty at N = 0)
  double residual = 0.0;   // moment-norm of the part outside the three levels
};

// Requires basis.max_degree >= N+1 and 0 <= j < basis.dimension.
RecurrenceBlocks recurrence_blocks(const ChaosBasis& basis, int j, int N);

// Coefficient tables of the P_phi-exponential expansion: entry [n][k] is
// the rational coefficient of sigma^k Q^{n-2k} in the t^n coefficient of
// e(ts, .), where sigma = <s, s>. Two algebraically independent routes:
// formal power-series division of exp(tQ) by the Laplace series, and the
// signed-partition combinatorial sum for the reciprocal Laplace series.
std::vector<std::vector<Rational>> pphi_exponential_division(
    const std::vector<Rational>& m, int n_max);
std::vector<std::vector<Rational>> pphi_exponential_combinatorial(
    const std::vector<Rational>& m, int n_max);

struct PphiExpansion {
  std::vector<std::vector<Rational>> division;
  std::vector<std::vector<Rational>> combinatorial;
  bool agree = false;
};

// Runs both routes and compares exactly; a disagreement raises a
// formula-transcription alarm carrying both tables.
PphiExpansion pphi_exponential_coeffs(const MomentWeights& m, int n_max);

} // namespace greynoise
