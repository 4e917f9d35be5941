#pragma once

#include <complex>
#include <vector>

#include "greynoise/mlfun.hpp"
#include "greynoise/series.hpp"

namespace greynoise {

// Geometry of the reproducing kernel space with kernel prod_j phi(z_j w~_j):
// the monomial z^gamma carries the weight phi_gamma = prod_j c_{gamma_j}
// (Taylor convention). Monomials hitting a zero coefficient are excluded
// directions.
class FockGeometry {
public:
  explicit FockGeometry(MLFunction phi) : phi_(std::move(phi)) {}

  const MLFunction& phi() const { return phi_; }
  // prod_j c_{gamma_j}; throws std::domain_error on an excluded direction
  double weight(const MultiIndex& gamma) const;
  Rational exact_weight(const MultiIndex& gamma) const;

private:
  MLFunction phi_;
};

// K_phi(z, w) = prod_j phi(z_j conj(w_j)) over the joint finite support.
std::complex<double> kernel_eval(const std::vector<std::complex<double>>& z,
                                 const std::vector<std::complex<double>>& w,
                                 const MLFunction& phi);

enum class DomainVerdict { InDomain, Diverges, Inconclusive };

struct DomainCheckReport {
  std::vector<double> partial_sums;   // of |1 - phi(|z_j|^2)|
  DomainVerdict verdict = DomainVerdict::Inconclusive;
  double tail_estimate = 0.0;
};

// Convergence test of sum_j |1 - phi(|z_j|^2)| on the given prefix, by a
// ratio/tail heuristic. Finite support always lands in the domain.
DomainCheckReport domain_check(const std::vector<std::complex<double>>& prefix,
                               const MLFunction& phi);

// <f, g> = sum_gamma f_gamma conj(g_gamma) / phi_gamma.
std::complex<double> fock_inner(const GradedSeries& f, const GradedSeries& g,
                                const FockGeometry& geom);
double fock_norm(const GradedSeries& f, const FockGeometry& geom);

// Image of a chaos expansion in the kernel space: the basis element with
// index gamma maps to the normalized monomial of the same index, so the
// monomial coefficients of the image are c_gamma sqrt(phi_gamma) and the
// chaos l2 norm equals the Fock norm of the image.
GradedSeries phi_transform(const GradedSeries& chaos_coeffs, const FockGeometry& geom);

// Index-additive product on chaos coefficients: coefficient convolution.
GradedSeries wick_product(const GradedSeries& f, const GradedSeries& g);

// Generalized derivative on one-variable coefficient sequences:
// a_k z^k -> (c_{k-1} / c_k) a_k z^{k-1}. Throws std::domain_error when a
// required coefficient ratio is undefined (zero c_k).
std::vector<std::complex<double>> gl_derivative(
    const std::vector<std::complex<double>>& coeffs, const MLFunction& phi);

// Per-coordinate version on graded series, acting in variable j; the ratio
// weights are taken from `taylor` (index by exponent).
template <class T>
Series<T> gl_derivative_coord(const Series<T>& f, int j,
                              const std::vector<T>& taylor) {
  Series<T> out;
  for (const auto& [gamma, coef] : f.coefficients()) {
    const int k = gamma[j];
    if (k == 0) continue;
    if (k >= static_cast<int>(taylor.size()) || taylor[k] == T(0)) {
      throw std::domain_error("gl_derivative: undefined coefficient ratio");
    }
    out.add(gamma.decremented(j), coef * taylor[k - 1] / taylor[k]);
  }
  return out;
}

struct PairingCheck {
  std::complex<double> derivative_side;   // <d^phi z^k, z^l>
  std::complex<double> multiplier_side;   // <z^k, M_z z^l>
  double commutator_eigenvalue;           // [d^phi, M_z] z^k = lambda_k z^k
};

// Both sides of the adjoint pairing (0 unless l = k-1, then 1/c_k) plus the
// commutator eigenvalue (c_k^2 - c_{k-1} c_{k+1}) / (c_k c_{k+1}).
PairingCheck pairing_check(int k, int l, const MLFunction& phi);

// exact-rational commutator eigenvalue for phi with exact coefficients
Rational commutator_eigenvalue_exact(int k, const MLFunction& phi);

} // namespace greynoise
