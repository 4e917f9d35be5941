#include "greynoise/special.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "greynoise/errors.hpp"
#include "greynoise/quadrature.hpp"

namespace greynoise {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Lanczos coefficients, g = 7, n = 9 (Godfrey's set).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

double lanczos_positive(double x) {
  // valid for x >= 0.5
  const double g = 7.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
  const double t = x + g - 0.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, x - 0.5) * std::exp(-t) * a;
}

} // namespace

double gamma_fn(double x) {
  if (std::isnan(x)) return x;
  if (x >= 0.5) return lanczos_positive(x);
  if (x == std::floor(x)) {
    throw std::invalid_argument("gamma_fn: pole at non-positive integer");
  }
  // reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
  return kPi / (std::sin(kPi * x) * lanczos_positive(1.0 - x));
}

double log_gamma(double x) {
  if (x <= 0.0) throw std::invalid_argument("log_gamma: requires x > 0");
  const double g = 7.0;
  double a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (x - 1.0 + i);
  const double t = x + g - 0.5;
  return 0.5 * std::log(2.0 * kPi) + (x - 0.5) * std::log(t) - t + std::log(a);
}

double reciprocal_gamma(double x) {
  if (x <= 0.0 && x == std::floor(x)) return 0.0;
  return 1.0 / gamma_fn(x);
}

double gamma_stirling_oracle(double x) {
  if (x <= 0.0) throw std::invalid_argument("gamma_stirling_oracle: requires x > 0");
  // push the argument above 12 where the Stirling series is accurate
  double shift = 1.0;
  while (x < 12.0) {
    shift *= x;
    x += 1.0;
  }
  static const double c[6] = {
      1.0 / 12.0, -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0, 1.0 / 1188.0,
      -691.0 / 360360.0,
  };
  const double inv2 = 1.0 / (x * x);
  double series = 0.0, p = 1.0 / x;
  for (int k = 0; k < 6; ++k) {
    series += c[k] * p;
    p *= inv2;
  }
  const double lg =
      (x - 0.5) * std::log(x) - x + 0.5 * std::log(2.0 * kPi) + series;
  return std::exp(lg) / shift;
}

double mittag_leffler_neg_asymptotic(double alpha, double t, int terms) {
  double s = 0.0, sign = 1.0, tp = 1.0 / t;
  for (int k = 1; k <= terms; ++k) {
    s += sign * tp * reciprocal_gamma(1.0 - alpha * k);
    sign = -sign;
    tp /= t;
  }
  return s;
}

namespace {

double ml_neg_taylor(double alpha, double t) {
  // E_alpha(-t) = sum (-t)^k / Gamma(alpha k + 1); alternating, monitor the
  // largest intermediate term so cancellation loss can be detected.
  double sum = 1.0, term = 1.0, max_term = 1.0;
  for (int k = 1; k <= 400; ++k) {
    term *= -t;
    const double contrib = term * reciprocal_gamma(alpha * k + 1.0);
    sum += contrib;
    max_term = std::max(max_term, std::abs(contrib));
    if (std::abs(contrib) < 1e-18 * std::max(1.0, std::abs(sum)) && k > 4) {
      if (max_term > 1e3 * std::max(std::abs(sum), 1e-30)) {
        throw accuracy_error("mittag_leffler_neg: Taylor cancellation too severe");
      }
      return sum;
    }
  }
  throw accuracy_error("mittag_leffler_neg: Taylor series did not settle");
}

double ml_neg_integral(double alpha, double t) {
  // sin(pa)/(pa) * Int_0^inf exp(-(tv)^(1/a)) / (v^2 + 2 v cos(pa) + 1) dv
  const double pa = kPi * alpha;
  const double c = std::cos(pa), s = std::sin(pa);
  const double inv_alpha = 1.0 / alpha;
  auto integrand = [&](double v) {
    const double tv = t * v;
    const double ex = (tv > 0.0) ? std::exp(-std::pow(tv, inv_alpha)) : 1.0;
    return ex / (v * v + 2.0 * v * c + 1.0);
  };
  // effective support: exp cutoff once (tv)^(1/alpha) ~ 46
  const double v_hi = std::pow(46.0, alpha) / t;
  // the denominator dips near v = -cos(pa) when alpha > 1/2; split there
  std::vector<double> cuts{0.0};
  if (c < 0.0 && -c < v_hi) cuts.push_back(-c);
  if (v_hi > 1.0) cuts.push_back(1.0);
  cuts.push_back(v_hi);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    total += integrate_or_throw(integrand, cuts[i], cuts[i + 1], 1e-16, 1e-13);
  }
  return s / pa * total;
}

} // namespace

double mittag_leffler_neg(double alpha, double t) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("mittag_leffler_neg: requires 0 < alpha <= 1");
  }
  if (t < 0.0) throw std::invalid_argument("mittag_leffler_neg: requires t >= 0");
  if (alpha == 1.0) return std::exp(-t);
  if (t == 0.0) return 1.0;

  // algebraic tail once its own error estimate is far below target; the
  // first omitted term can sit on a Gamma pole, so scan a few
  if (t > 8.0) {
    const int terms = 5;
    double next = 0.0;
    for (int k = terms + 1; k <= terms + 4; ++k) {
      next = std::max(next, std::abs(std::pow(t, -k) * reciprocal_gamma(1.0 - alpha * k)));
    }
    const double val = mittag_leffler_neg_asymptotic(alpha, t, terms);
    if (val > 0.0 && next < 1e-13 * val) return val;
  }
  if (t <= 1.0) return ml_neg_taylor(alpha, t);
  return ml_neg_integral(alpha, t);
}

} // namespace greynoise
