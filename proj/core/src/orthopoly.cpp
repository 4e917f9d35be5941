#include "greynoise/orthopoly.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

#include "greynoise/errors.hpp"

namespace greynoise {

int ChaosBasis::index_of(const MultiIndex& gamma) const {
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] == gamma) return static_cast<int>(i);
  }
  return -1;
}

std::vector<int> ChaosBasis::level(int degree) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i].degree() == degree) out.push_back(static_cast<int>(i));
  }
  return out;
}

Eigen::MatrixXd chaos_moment_matrix(int d, int N, const GramMatrix& g,
                                    const MomentWeights& m,
                                    const MomentLimits& limits) {
  const auto idx = enumerate_up_to(d, N);
  const int n = static_cast<int>(idx.size());
  std::map<MultiIndex, double> cache;
  auto cached_moment = [&](const MultiIndex& gamma) {
    auto it = cache.find(gamma);
    if (it != cache.end()) return it->second;
    const double v = moment(gamma, g, m, limits).value;
    cache.emplace(gamma, v);
    return v;
  };
  Eigen::MatrixXd out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const double v = cached_moment(idx[i].plus(idx[j]));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return out;
}

ChaosBasis orthonormal_basis(int d, int N, const GramMatrix& g,
                             const MomentWeights& m, const MomentLimits& limits) {
  ChaosBasis basis;
  basis.dimension = d;
  basis.max_degree = N;
  basis.indices = enumerate_up_to(d, N);
  basis.moment_matrix = chaos_moment_matrix(d, N, g, m, limits);

  const int n = static_cast<int>(basis.indices.size());
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(basis.moment_matrix,
                                                      Eigen::EigenvaluesOnly);
    if (es.eigenvalues().minCoeff() <= 1e-10) {
      throw std::invalid_argument(
          "orthonormal_basis: moment matrix numerically singular; degenerate "
          "test-function configuration");
    }
  }

  const Eigen::MatrixXd& mom = basis.moment_matrix;
  Eigen::MatrixXd q = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXd v = Eigen::VectorXd::Zero(n);
    v(i) = 1.0;
    // modified Gram-Schmidt with one reorthogonalization pass
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < i; ++k) {
        const double proj = q.row(k) * (mom * v);
        v -= proj * q.row(k).transpose();
      }
    }
    const double norm_sq = v.transpose() * mom * v;
    if (!(norm_sq > 1e-12)) {
      throw std::invalid_argument("orthonormal_basis: vanishing norm during "
                                  "orthogonalization");
    }
    v /= std::sqrt(norm_sq);
    if (v(i) < 0.0) v = -v;   // positive leading coefficient
    q.row(i) = v.transpose();
  }
  basis.coeffs = std::move(q);
  return basis;
}

Eigen::MatrixXd recompute_basis_gram(const ChaosBasis& basis) {
  return basis.coeffs * basis.moment_matrix * basis.coeffs.transpose();
}

RecurrenceBlocks recurrence_blocks(const ChaosBasis& basis, int j, int N) {
  if (N + 1 > basis.max_degree) {
    throw std::invalid_argument("recurrence_blocks: N+1 exceeds basis degree");
  }
  if (j < 0 || j >= basis.dimension) {
    throw std::invalid_argument("recurrence_blocks: variable index out of range");
  }
  const auto rows = basis.level(N);
  const auto up = basis.level(N + 1);
  const auto mid = basis.level(N);
  const auto down = (N > 0) ? basis.level(N - 1) : std::vector<int>{};
  const int n = static_cast<int>(basis.indices.size());

  RecurrenceBlocks out;
  out.a.resize(rows.size(), up.size());
  out.b.resize(rows.size(), mid.size());
  out.c.resize(rows.size(), down.size());

  for (std::size_t r = 0; r < rows.size(); ++r) {
    // w = coefficients of Q_j * Qtilde^gamma over the monomial family
    Eigen::VectorXd w = Eigen::VectorXd::Zero(n);
    for (int col = 0; col < n; ++col) {
      const double c = basis.coeffs(rows[r], col);
      if (c == 0.0) continue;
      const MultiIndex shifted = basis.indices[col].incremented(j);
      int pos = -1;
      for (int t = 0; t < n; ++t) {
        if (basis.indices[t] == shifted) { pos = t; break; }
      }
      if (pos < 0) {
        throw std::logic_error("recurrence_blocks: shifted monomial missing");
      }
      w(pos) += c;
    }
    const Eigen::VectorXd mw = basis.moment_matrix * w;
    Eigen::VectorXd reconstruction = Eigen::VectorXd::Zero(n);
    auto project = [&](const std::vector<int>& level, Eigen::MatrixXd& block) {
      for (std::size_t cidx = 0; cidx < level.size(); ++cidx) {
        const double coef = basis.coeffs.row(level[cidx]) * mw;
        block(r, cidx) = coef;
        reconstruction += coef * basis.coeffs.row(level[cidx]).transpose();
      }
    };
    project(up, out.a);
    project(mid, out.b);
    if (N > 0) project(down, out.c);
    const Eigen::VectorXd diff = w - reconstruction;
    const double res_sq = diff.transpose() * basis.moment_matrix * diff;
    out.residual = std::max(out.residual, std::sqrt(std::max(0.0, res_sq)));
  }
  if (out.residual > 1e-8) {
    std::ostringstream os;
    os << "recurrence_blocks: projection residual " << out.residual
       << " outside the three adjacent levels; basis inconsistent";
    throw accuracy_error(os.str());
  }
  return out;
}

std::vector<std::vector<Rational>> pphi_exponential_division(
    const std::vector<Rational>& m, int n_max) {
  // coefficients of t^n in exp(t Q) / L(t s), tracked as polynomials in
  // (Q, sigma): row n, entry k multiplies sigma^k Q^{n-2k}.
  // Division recurrence: c_n = a_n - sum_{j>=1} m_j sigma^j c_{n-2j},
  // where a_n = Q^n / n! and sigma^j shifts the k-index by j.
  std::vector<std::vector<Rational>> c(n_max + 1);
  Rational inv_fact = 1;
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) inv_fact /= n;
    c[n].assign(n / 2 + 1, Rational(0));
    c[n][0] = inv_fact;
    for (int j = 1; 2 * j <= n; ++j) {
      if (j >= static_cast<int>(m.size())) break;
      for (int k = j; k <= n / 2; ++k) {
        c[n][k] -= m[j] * c[n - 2 * j][k - j];
      }
    }
  }
  return c;
}

namespace {

// sum over partitions of k into parts i >= 1 with multiplicities alpha_i of
//   (-1)^{sum alpha} (sum alpha)! / prod alpha_i! * prod m_i^{alpha_i}
void partition_sum(const std::vector<Rational>& m, int remaining, int max_part,
                   int part_count, const Rational& weight, Rational& acc) {
  if (remaining == 0) {
    // weight already carries prod m_i^{alpha_i} / prod alpha_i!; attach
    // (-1)^{parts} (parts)!
    Rational term = weight * Rational(factorial(part_count));
    if (part_count % 2 == 1) term = -term;
    acc += term;
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    if (part >= static_cast<int>(m.size())) continue;
    // choose multiplicity of this part
    Rational w = weight;
    Rational pw = 1;
    for (int mult = 1; mult * part <= remaining; ++mult) {
      pw *= m[part];
      w = weight * pw / Rational(factorial(mult));
      partition_sum(m, remaining - mult * part, part - 1, part_count + mult, w, acc);
    }
  }
}

} // namespace

std::vector<std::vector<Rational>> pphi_exponential_combinatorial(
    const std::vector<Rational>& m, int n_max) {
  // [t^{2k} sigma^k] of 1/L via signed compositions of k, then the Q-power
  // factor 1/(n-2k)!.
  std::vector<Rational> w(n_max / 2 + 1, Rational(0));
  w[0] = 1;
  for (int k = 1; k <= n_max / 2; ++k) {
    partition_sum(m, k, k, 0, Rational(1), w[k]);
  }
  std::vector<std::vector<Rational>> c(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    c[n].assign(n / 2 + 1, Rational(0));
    for (int k = 0; 2 * k <= n; ++k) {
      c[n][k] = w[k] / Rational(factorial(n - 2 * k));
    }
  }
  return c;
}

PphiExpansion pphi_exponential_coeffs(const MomentWeights& m, int n_max) {
  if (n_max > 20) {
    throw std::invalid_argument("pphi_exponential_coeffs: n_max beyond 20");
  }
  if (!m.has_exact()) {
    throw std::invalid_argument(
        "pphi_exponential_coeffs: exact moment weights required");
  }
  PphiExpansion out;
  out.division = pphi_exponential_division(*m.exact, n_max);
  out.combinatorial = pphi_exponential_combinatorial(*m.exact, n_max);
  out.agree = out.division == out.combinatorial;
  if (!out.agree) {
    throw accuracy_error(
        "pphi_exponential_coeffs: the series-division and combinatorial routes "
        "disagree (formula-transcription alarm); inspect both tables");
  }
  return out;
}

} // namespace greynoise
