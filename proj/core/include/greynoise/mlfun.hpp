#pragma once

#include <complex>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "greynoise/rational.hpp"

namespace greynoise {

// Entire function phi(z) = sum c_k z^k with c_0 = 1, c_1 > 0, c_k >= 0,
// truncated at order K. Values are immutable after construction. Where the
// Taylor coefficients are exactly rational (exponential, rational custom
// input, mixes/products thereof) an exact coefficient vector is carried
// alongside the doubles for the identity tests.
class MLFunction {
public:
  enum class Kind { Exp, MittagLeffler, Custom, Mix, Product, Compose };

  static constexpr int kDefaultOrder = 64;

  static MLFunction exponential(int order = kDefaultOrder);
  // alpha > 0; coefficients 1/Gamma(alpha k + 1)
  static MLFunction mittag_leffler(double alpha, int order = kDefaultOrder);
  static MLFunction custom(std::vector<double> taylor);
  static MLFunction custom_exact(std::vector<Rational> taylor);
  // convex combination; weights nonnegative, summing to 1
  static MLFunction mix(const std::vector<std::pair<double, MLFunction>>& parts);
  static MLFunction product(const MLFunction& a, const MLFunction& b);
  // normalized composition outer(inner(z)) / outer(1)
  static MLFunction compose(const MLFunction& outer, const MLFunction& inner);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  int order() const { return static_cast<int>(taylor_.size()) - 1; }

  // Taylor coefficient c_k (0 beyond the truncation order)
  double coefficient(int k) const;
  const std::vector<double>& taylor() const { return taylor_; }
  bool has_exact() const { return exact_.has_value(); }
  const std::vector<Rational>& exact_taylor() const;
  Rational exact_coefficient(int k) const;

  // Largest |z| at which the truncated series tail is estimated below
  // 1e-12 (ratio test on the trailing coefficients).
  double reliability_radius() const { return radius_; }

  // Truncated series evaluation; throws accuracy_error outside the
  // reliability radius.
  std::complex<double> eval(std::complex<double> z) const;
  double eval_real(double x) const;

  // phi(-t) for t >= 0 on the decaying axis, beyond the Taylor radius where
  // a dedicated route exists (exponential closed form, Mittag-Leffler
  // integral representation, recursion through combinators).
  double eval_neg_axis(double t) const;

  // true when eval_neg_axis can be evaluated for arbitrarily large t
  bool has_decay_route() const;

  const std::vector<double>& mix_weights() const { return weights_; }
  const std::vector<std::shared_ptr<const MLFunction>>& children() const {
    return children_;
  }

private:
  MLFunction() = default;
  void finalize();   // invariant checks, radius computation

  Kind kind_ = Kind::Custom;
  double alpha_ = 0.0;
  std::vector<double> taylor_;
  std::optional<std::vector<Rational>> exact_;
  std::vector<double> weights_;
  std::vector<std::shared_ptr<const MLFunction>> children_;
  double radius_ = 0.0;
};

// Moment weights m_n = c_n / 2^n, the divided convention used by every
// moment formula. Kept as a separate type so the two conventions cannot be
// swapped silently.
struct MomentWeights {
  std::vector<double> m;
  std::optional<std::vector<Rational>> exact;

  double operator[](std::size_t n) const { return n < m.size() ? m[n] : 0.0; }
  std::size_t size() const { return m.size(); }
  Rational exact_at(std::size_t n) const;
  bool has_exact() const { return exact.has_value(); }
};

MomentWeights moment_weights(const MLFunction& phi);

struct PsdSampleReport {
  double min_eigenvalue = 0.0;
  bool eigen_pass = false;
  // worst excess of |phi(z conj(w))|^2 over phi(|z|^2) phi(|w|^2)
  double worst_bound_excess = 0.0;
  bool bound_pass = false;
  bool pass() const { return eigen_pass && bound_pass; }
};

// Builds the kernel matrix [phi(z_i conj(z_j))], reports its minimum
// eigenvalue against -tol, and checks the pairwise positive-definiteness
// bound |phi(z w~)|^2 <= phi(|z|^2) phi(|w|^2) + 1e-10.
PsdSampleReport psd_sample_check(const MLFunction& phi,
                                 const std::vector<std::complex<double>>& points,
                                 double tol);

} // namespace greynoise
