#include "greynoise/mlfun.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "greynoise/errors.hpp"
#include "greynoise/special.hpp"

namespace greynoise {

namespace {

// tolerance for clamping combinator round-off below zero
constexpr double kNegClamp = 1e-13;

double tail_estimate(const std::vector<double>& c, double r) {
  const int K = static_cast<int>(c.size()) - 1;
  if (K < 2 || c[K] == 0.0) return 0.0;
  double ratio = 0.0;
  for (int k = std::max(1, K - 5); k < K; ++k) {
    if (c[k] > 0.0 && c[k + 1] > 0.0) ratio = std::max(ratio, c[k + 1] / c[k]);
  }
  const double q = ratio * r;
  if (q >= 1.0) return std::numeric_limits<double>::infinity();
  return c[K] * std::pow(r, K) * q / (1.0 - q);
}

} // namespace

void MLFunction::finalize() {
  if (taylor_.size() < 3) {
    throw std::invalid_argument("MLFunction: truncation order must be >= 2");
  }
  double scale = 0.0;
  for (double& c : taylor_) {
    if (c < 0.0) {
      if (c > -kNegClamp * std::max(1.0, scale)) {
        c = 0.0;
      } else {
        throw std::invalid_argument(
            "MLFunction: negative Taylor coefficient, input not in the admissible class");
      }
    }
    scale = std::max(scale, c);
  }
  if (std::abs(taylor_[0] - 1.0) > 1e-12) {
    throw std::invalid_argument("MLFunction: constant term must be exactly 1");
  }
  taylor_[0] = 1.0;
  if (!(taylor_[1] > 0.0)) {
    throw std::invalid_argument("MLFunction: first derivative at 0 must be positive");
  }
  if (exact_) {
    if (exact_->size() != taylor_.size()) exact_.reset();
  }
  // largest r with estimated tail below 1e-12, by bisection
  double lo = 0.0, hi = 1.0;
  while (tail_estimate(taylor_, hi) < 1e-12 && hi < 1e8) hi *= 2.0;
  if (hi >= 1e8) {
    radius_ = hi;
  } else {
    for (int it = 0; it < 80; ++it) {
      const double mid = 0.5 * (lo + hi);
      (tail_estimate(taylor_, mid) < 1e-12 ? lo : hi) = mid;
    }
    radius_ = lo;
  }
}

MLFunction MLFunction::exponential(int order) {
  MLFunction f;
  f.kind_ = Kind::Exp;
  f.taylor_.resize(order + 1);
  std::vector<Rational> exact(order + 1);
  Rational c = 1;
  for (int k = 0; k <= order; ++k) {
    if (k > 0) c /= k;
    exact[k] = c;
    f.taylor_[k] = to_double(c);
  }
  f.exact_ = std::move(exact);
  f.finalize();
  return f;
}

MLFunction MLFunction::mittag_leffler(double alpha, int order) {
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("mittag_leffler: requires alpha > 0");
  }
  MLFunction f;
  f.kind_ = Kind::MittagLeffler;
  f.alpha_ = alpha;
  f.taylor_.resize(order + 1);
  for (int k = 0; k <= order; ++k) {
    f.taylor_[k] = reciprocal_gamma(alpha * k + 1.0);
  }
  if (alpha == 1.0) {
    std::vector<Rational> exact(order + 1);
    Rational c = 1;
    for (int k = 0; k <= order; ++k) {
      if (k > 0) c /= k;
      exact[k] = c;
    }
    f.exact_ = std::move(exact);
  }
  f.finalize();
  return f;
}

MLFunction MLFunction::custom(std::vector<double> taylor) {
  MLFunction f;
  f.kind_ = Kind::Custom;
  f.taylor_ = std::move(taylor);
  f.finalize();
  return f;
}

MLFunction MLFunction::custom_exact(std::vector<Rational> taylor) {
  MLFunction f;
  f.kind_ = Kind::Custom;
  f.taylor_.reserve(taylor.size());
  for (const Rational& q : taylor) f.taylor_.push_back(to_double(q));
  f.exact_ = std::move(taylor);
  f.finalize();
  return f;
}

MLFunction MLFunction::mix(const std::vector<std::pair<double, MLFunction>>& parts) {
  if (parts.empty()) throw std::invalid_argument("mix: needs at least one part");
  double wsum = 0.0;
  std::size_t order = SIZE_MAX;
  bool exact_ok = true;
  for (const auto& [w, g] : parts) {
    if (w < 0.0) throw std::invalid_argument("mix: weights must be nonnegative");
    wsum += w;
    order = std::min(order, g.taylor_.size());
    exact_ok = exact_ok && g.has_exact();
  }
  if (std::abs(wsum - 1.0) > 1e-12) {
    throw std::invalid_argument("mix: weights must sum to 1");
  }
  MLFunction f;
  f.kind_ = Kind::Mix;
  f.taylor_.assign(order, 0.0);
  for (const auto& [w, g] : parts) {
    for (std::size_t k = 0; k < order; ++k) f.taylor_[k] += w * g.taylor_[k];
    f.weights_.push_back(w);
    f.children_.push_back(std::make_shared<MLFunction>(g));
  }
  // exact path only when the weights are exactly representable
  if (exact_ok) {
    std::vector<Rational> e(order, 0);
    bool all_rational = true;
    for (const auto& [w, g] : parts) {
      const Rational wq(w);
      if (to_double(wq) != w) { all_rational = false; break; }
      for (std::size_t k = 0; k < order; ++k) e[k] += wq * g.exact_->at(k);
    }
    if (all_rational) f.exact_ = std::move(e);
  }
  f.finalize();
  return f;
}

MLFunction MLFunction::product(const MLFunction& a, const MLFunction& b) {
  const std::size_t order = std::min(a.taylor_.size(), b.taylor_.size());
  MLFunction f;
  f.kind_ = Kind::Product;
  f.taylor_.assign(order, 0.0);
  for (std::size_t i = 0; i < order; ++i) {
    for (std::size_t j = 0; i + j < order && j < b.taylor_.size(); ++j) {
      f.taylor_[i + j] += a.taylor_[i] * b.taylor_[j];
    }
  }
  if (a.has_exact() && b.has_exact()) {
    std::vector<Rational> e(order, 0);
    for (std::size_t i = 0; i < order; ++i) {
      for (std::size_t j = 0; i + j < order && j < b.taylor_.size(); ++j) {
        e[i + j] += a.exact_->at(i) * b.exact_->at(j);
      }
    }
    f.exact_ = std::move(e);
  }
  f.children_ = {std::make_shared<MLFunction>(a), std::make_shared<MLFunction>(b)};
  f.finalize();
  return f;
}

MLFunction MLFunction::compose(const MLFunction& outer, const MLFunction& inner) {
  const std::size_t order = std::min(outer.taylor_.size(), inner.taylor_.size());
  // outer(1 + u) = sum_j g_j u^j with g_j = sum_{k>=j} C(k,j) c_k, evaluated
  // from the available coefficients; u = inner - 1 has no constant term.
  const std::size_t Kout = outer.taylor_.size();
  std::vector<double> g(order, 0.0);
  for (std::size_t j = 0; j < order; ++j) {
    double binom = 1.0;   // C(j, j)
    double sum = 0.0;
    for (std::size_t k = j; k < Kout; ++k) {
      if (k > j) binom *= static_cast<double>(k) / static_cast<double>(k - j);
      sum += binom * outer.taylor_[k];
    }
    g[j] = sum;
  }
  std::vector<double> u(order, 0.0);
  for (std::size_t k = 1; k < order && k < inner.taylor_.size(); ++k) {
    u[k] = inner.taylor_[k];
  }
  // accumulate sum_j g_j u^j by truncated powers
  std::vector<double> acc(order, 0.0), upow(order, 0.0);
  acc[0] = g[0];
  upow[0] = 1.0;
  for (std::size_t j = 1; j < order; ++j) {
    // upow <- upow * u (truncated); upow has valuation >= j
    std::vector<double> next(order, 0.0);
    for (std::size_t i = j - 1; i < order; ++i) {
      if (upow[i] == 0.0) continue;
      for (std::size_t k = 1; i + k < order; ++k) next[i + k] += upow[i] * u[k];
    }
    upow = std::move(next);
    for (std::size_t i = 0; i < order; ++i) acc[i] += g[j] * upow[i];
  }
  MLFunction f;
  f.kind_ = Kind::Compose;
  f.taylor_.resize(order);
  for (std::size_t i = 0; i < order; ++i) f.taylor_[i] = acc[i] / g[0];
  f.children_ = {std::make_shared<MLFunction>(outer), std::make_shared<MLFunction>(inner)};
  f.finalize();
  return f;
}

double MLFunction::coefficient(int k) const {
  if (k < 0) return 0.0;
  return k < static_cast<int>(taylor_.size()) ? taylor_[k] : 0.0;
}

const std::vector<Rational>& MLFunction::exact_taylor() const {
  if (!exact_) throw std::logic_error("MLFunction: no exact coefficients");
  return *exact_;
}

Rational MLFunction::exact_coefficient(int k) const {
  const auto& e = exact_taylor();
  if (k < 0 || k >= static_cast<int>(e.size())) return 0;
  return e[k];
}

std::complex<double> MLFunction::eval(std::complex<double> z) const {
  if (std::abs(z) > radius_) {
    throw accuracy_error("MLFunction::eval: argument outside reliability radius");
  }
  std::complex<double> acc = 0.0;
  for (auto it = taylor_.rbegin(); it != taylor_.rend(); ++it) {
    acc = acc * z + *it;
  }
  return acc;
}

double MLFunction::eval_real(double x) const {
  if (std::abs(x) > radius_) {
    throw accuracy_error("MLFunction::eval_real: argument outside reliability radius");
  }
  double acc = 0.0;
  for (auto it = taylor_.rbegin(); it != taylor_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

bool MLFunction::has_decay_route() const {
  switch (kind_) {
    case Kind::Exp:
      return true;
    case Kind::MittagLeffler:
      return alpha_ <= 1.0;
    case Kind::Mix:
    case Kind::Product:
      for (const auto& c : children_) {
        if (!c->has_decay_route()) return false;
      }
      return true;
    case Kind::Compose:
      return children_[1]->has_decay_route();
    case Kind::Custom:
      return false;
  }
  return false;
}

double MLFunction::eval_neg_axis(double t) const {
  if (t < 0.0) throw std::invalid_argument("eval_neg_axis: requires t >= 0");
  switch (kind_) {
    case Kind::Exp:
      return std::exp(-t);
    case Kind::MittagLeffler:
      if (alpha_ <= 1.0) return mittag_leffler_neg(alpha_, t);
      break;   // entire of order < 1: only the Taylor route below
    case Kind::Mix: {
      double s = 0.0;
      for (std::size_t i = 0; i < children_.size(); ++i) {
        s += weights_[i] * children_[i]->eval_neg_axis(t);
      }
      return s;
    }
    case Kind::Product: {
      double p = 1.0;
      for (const auto& c : children_) p *= c->eval_neg_axis(t);
      return p;
    }
    case Kind::Compose: {
      const double v = children_[1]->eval_neg_axis(t);
      return children_[0]->eval_real(v) / children_[0]->eval_real(1.0);
    }
    case Kind::Custom:
      break;
  }
  if (t <= radius_) return eval_real(-t);
  throw accuracy_error("eval_neg_axis: no decaying-axis route beyond the Taylor radius");
}

Rational MomentWeights::exact_at(std::size_t n) const {
  if (!exact) throw std::logic_error("MomentWeights: no exact values");
  if (n >= exact->size()) return 0;
  return (*exact)[n];
}

MomentWeights moment_weights(const MLFunction& phi) {
  MomentWeights w;
  w.m.resize(phi.taylor().size());
  double p = 1.0;
  for (std::size_t n = 0; n < w.m.size(); ++n) {
    w.m[n] = phi.taylor()[n] / p;
    p *= 2.0;
  }
  if (phi.has_exact()) {
    std::vector<Rational> e(phi.exact_taylor().size());
    Rational q = 1;
    for (std::size_t n = 0; n < e.size(); ++n) {
      e[n] = phi.exact_taylor()[n] / q;
      q *= 2;
    }
    w.exact = std::move(e);
  }
  return w;
}

PsdSampleReport psd_sample_check(const MLFunction& phi,
                                 const std::vector<std::complex<double>>& points,
                                 double tol) {
  const int n = static_cast<int>(points.size());
  if (n == 0) throw std::invalid_argument("psd_sample_check: needs points");
  Eigen::MatrixXcd k(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      k(i, j) = phi.eval(points[i] * std::conj(points[j]));
    }
  }
  PsdSampleReport rep;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(k);
  rep.min_eigenvalue = es.eigenvalues().minCoeff();
  rep.eigen_pass = rep.min_eigenvalue >= -tol;

  rep.worst_bound_excess = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double lhs = std::norm(phi.eval(points[i] * std::conj(points[j])));
      const double rhs = phi.eval_real(std::norm(points[i])) *
                         phi.eval_real(std::norm(points[j]));
      rep.worst_bound_excess = std::max(rep.worst_bound_excess, lhs - rhs);
    }
  }
  rep.bound_pass = rep.worst_bound_excess <= 1e-10;
  return rep;
}

} // namespace greynoise
