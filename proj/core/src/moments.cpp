#include "greynoise/moments.hpp"

#include <cmath>
#include <stdexcept>

#include "greynoise/errors.hpp"

namespace greynoise {

GramMatrix::GramMatrix(Eigen::MatrixXd g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw std::invalid_argument("GramMatrix: not square");
  if (!g_.isApprox(g_.transpose(), 1e-12)) {
    throw std::invalid_argument("GramMatrix: not symmetric");
  }
  g_ = 0.5 * (g_ + g_.transpose()).eval();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g_, Eigen::EigenvaluesOnly);
  min_eig_ = es.eigenvalues().minCoeff();
  if (min_eig_ < -1e-10) {
    throw std::invalid_argument("GramMatrix: not positive semidefinite");
  }
}

GramMatrix GramMatrix::identity(int d) {
  GramMatrix g(Eigen::MatrixXd::Identity(d, d));
  std::vector<std::vector<Rational>> e(d, std::vector<Rational>(d, 0));
  for (int i = 0; i < d; ++i) e[i][i] = 1;
  g.exact_ = std::move(e);
  return g;
}

GramMatrix GramMatrix::exact(std::vector<std::vector<Rational>> entries) {
  const int d = static_cast<int>(entries.size());
  Eigen::MatrixXd m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(entries[i].size()) != d) {
      throw std::invalid_argument("GramMatrix: ragged exact entries");
    }
    for (int j = 0; j < d; ++j) {
      if (entries[i][j] != entries[j][i]) {
        throw std::invalid_argument("GramMatrix: exact entries not symmetric");
      }
      m(i, j) = to_double(entries[i][j]);
    }
  }
  GramMatrix g(std::move(m));
  g.exact_ = std::move(entries);
  return g;
}

const Rational& GramMatrix::exact_entry(int i, int j) const {
  if (!exact_) throw std::logic_error("GramMatrix: no exact entries");
  return (*exact_)[i][j];
}

GramMatrix GramMatrix::scaled(double c) const {
  return GramMatrix(Eigen::MatrixXd(c * g_));
}

namespace {

void check_limits(const MultiIndex& gamma, const GramMatrix& g,
                  const MomentLimits& limits) {
  if (static_cast<int>(gamma.support_size()) > g.dimension()) {
    throw std::invalid_argument("moment: gamma support exceeds Gram dimension");
  }
  if (gamma.degree() > limits.max_degree) {
    throw std::invalid_argument("moment: degree beyond configured maximum");
  }
  if (g.dimension() > limits.max_dimension) {
    throw std::invalid_argument("moment: dimension beyond configured maximum");
  }
}

// (n choose beta) prod_{i<=j} 2^{beta_ij (1-delta_ij)} as exact integer
BigInt solution_weight(const PairAssignment& beta, int n) {
  std::vector<int> parts;
  parts.reserve(beta.beta.size());
  int off_diag = 0;
  for (const auto& [ij, v] : beta.beta) {
    parts.push_back(v);
    if (ij.first != ij.second) off_diag += v;
  }
  BigInt w = multinomial(n, parts);
  w <<= off_diag;   // * 2^{off-diagonal count}
  return w;
}

} // namespace

BigInt moment_denominator(const MultiIndex& gamma) {
  const int deg = gamma.degree();
  if (deg % 2 != 0) return 0;
  const int n = deg / 2;
  BigInt den = 0;
  for (const PairAssignment& beta : solve_diophantine(gamma)) {
    den += solution_weight(beta, n);
  }
  return den;
}

MomentResult moment(const MultiIndex& gamma, const GramMatrix& g,
                    const MomentWeights& m, const MomentLimits& limits) {
  check_limits(gamma, g, limits);
  MomentResult out;
  const int deg = gamma.degree();
  if (deg % 2 != 0) return out;
  const int n = deg / 2;
  out.half_degree = n;

  const auto solutions = solve_diophantine(gamma);
  out.solution_count = static_cast<long>(solutions.size());
  BigInt den = 0;
  double num = 0.0;
  for (const PairAssignment& beta : solutions) {
    const BigInt w = solution_weight(beta, n);
    den += w;
    double gram_part = 1.0;
    for (const auto& [ij, v] : beta.beta) {
      gram_part *= std::pow(g(ij.first, ij.second), v);
    }
    num += to_double(w) * gram_part;
  }
  const double factor = to_double(factorial(2 * n)) * m[n] / to_double(den);
  out.value = factor * num;
  return out;
}

Rational moment_multiplier_exact(const MultiIndex& gamma, const GramMatrix& g,
                                 const MomentLimits& limits) {
  check_limits(gamma, g, limits);
  const int deg = gamma.degree();
  if (deg % 2 != 0) return 0;
  const int n = deg / 2;
  BigInt den = 0;
  Rational num = 0;
  for (const PairAssignment& beta : solve_diophantine(gamma)) {
    const BigInt w = solution_weight(beta, n);
    den += w;
    Rational gram_part = 1;
    for (const auto& [ij, v] : beta.beta) {
      const Rational& e = g.exact_entry(ij.first, ij.second);
      for (int k = 0; k < v; ++k) gram_part *= e;
    }
    num += Rational(w) * gram_part;
  }
  return Rational(factorial(2 * n)) * num / Rational(den);
}

Rational moment_exact(const MultiIndex& gamma, const GramMatrix& g,
                      const MomentWeights& m, const MomentLimits& limits) {
  const int deg = gamma.degree();
  if (deg % 2 != 0) return 0;
  return moment_multiplier_exact(gamma, g, limits) * m.exact_at(deg / 2);
}

double radial_moment(int n, double s_norm_sq, const MomentWeights& m) {
  if (n < 0) throw std::invalid_argument("radial_moment: requires n >= 0");
  if (s_norm_sq < 0.0) throw std::invalid_argument("radial_moment: requires |s|^2 >= 0");
  return to_double(factorial(2 * n)) * m[n] * std::pow(s_norm_sq, n);
}

Rational radial_moment_exact(int n, const Rational& s_norm_sq, const MomentWeights& m) {
  Rational p = 1;
  for (int k = 0; k < n; ++k) p *= s_norm_sq;
  return Rational(factorial(2 * n)) * m.exact_at(n) * p;
}

double laplace_transform(const MomentWeights& m, double s_norm_sq) {
  if (s_norm_sq < 0.0) {
    throw std::invalid_argument("laplace_transform: requires |s|^2 >= 0");
  }
  double sum = 0.0, term = 0.0, prev = 0.0;
  double p = 1.0;
  for (std::size_t n = 0; n < m.size(); ++n) {
    prev = term;
    term = m[n] * p;
    sum += term;
    p *= s_norm_sq;
  }
  // ratio-test tail estimate from the last two terms
  if (term != 0.0) {
    const double q = (prev != 0.0) ? std::abs(term / prev) : 1.0;
    if (q >= 1.0) {
      throw accuracy_error("laplace_transform: series tail diverges at this argument");
    }
    const double tail = std::abs(term) * q / (1.0 - q);
    if (tail > 1e-10 * std::max(1.0, std::abs(sum))) {
      throw accuracy_error("laplace_transform: truncation tail above tolerance");
    }
  }
  return sum;
}

namespace {

double matchings_sum(std::vector<int>& vars, const GramMatrix& g) {
  // vars holds the expanded variable list; match the first element against
  // every later one and recurse
  if (vars.empty()) return 1.0;
  const int first = vars[0];
  double total = 0.0;
  for (std::size_t k = 1; k < vars.size(); ++k) {
    std::vector<int> rest;
    rest.reserve(vars.size() - 2);
    for (std::size_t i = 1; i < vars.size(); ++i) {
      if (i != k) rest.push_back(vars[i]);
    }
    total += g(first, vars[k]) * matchings_sum(rest, g);
  }
  return total;
}

} // namespace

double isserlis_oracle(const MultiIndex& gamma, const GramMatrix& g) {
  const int deg = gamma.degree();
  if (deg % 2 != 0) return 0.0;
  if (deg > 12) throw std::invalid_argument("isserlis_oracle: degree beyond 12");
  std::vector<int> vars;
  vars.reserve(deg);
  for (std::size_t j = 0; j < gamma.support_size(); ++j) {
    for (int k = 0; k < gamma[j]; ++k) vars.push_back(static_cast<int>(j));
  }
  return matchings_sum(vars, g);
}

namespace {

template <class T, class GramEntry>
T coefficient_route(const MultiIndex& gamma, int dim, GramEntry entry, T m_n) {
  const int deg = gamma.degree();
  const int n = deg / 2;
  // quadratic form sum_{i,j} g_ij t_i t_j over ordered pairs
  Series<T> q;
  for (int i = 0; i < dim; ++i) {
    for (int j = 0; j < dim; ++j) {
      q.add(MultiIndex::unit(i).plus(MultiIndex::unit(j)), entry(i, j));
    }
  }
  const Series<T> p = q.pow(n);
  T result = p.at(gamma);
  for (std::size_t j = 0; j < gamma.support_size(); ++j) {
    for (int k = 2; k <= gamma[j]; ++k) result *= T(k);
  }
  return result * m_n;
}

} // namespace

double coefficient_oracle(const MultiIndex& gamma, const GramMatrix& g,
                          const MomentWeights& m) {
  const int deg = gamma.degree();
  if (deg % 2 != 0) return 0.0;
  return coefficient_route<double>(
      gamma, g.dimension(), [&](int i, int j) { return g(i, j); }, m[deg / 2]);
}

Rational coefficient_oracle_exact(const MultiIndex& gamma, const GramMatrix& g,
                                  const MomentWeights& m) {
  const int deg = gamma.degree();
  if (deg % 2 != 0) return 0;
  return coefficient_route<Rational>(
      gamma, g.dimension(), [&](int i, int j) { return g.exact_entry(i, j); },
      m.exact_at(deg / 2));
}

} // namespace greynoise
