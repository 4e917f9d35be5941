#include "greynoise/kondratiev.hpp"

#include <cmath>
#include <stdexcept>

namespace greynoise {

WeightSystem WeightSystem::geometric(double a_base, double b_base, int d) {
  if (!(a_base > 1.0) || !(b_base > 1.0)) {
    throw std::invalid_argument("WeightSystem: bases must exceed 1");
  }
  if (d < 1) throw std::invalid_argument("WeightSystem: d must be >= 1");
  return {a_base, b_base, d};
}

double WeightSystem::a(int j) const {
  if (j < 1) throw std::invalid_argument("WeightSystem::a: j >= 1 required");
  return std::pow(a_base, j);
}

double WeightSystem::b(int n) const {
  if (n < 0) throw std::invalid_argument("WeightSystem::b: n >= 0 required");
  return std::pow(b_base, n);
}

bool WeightSystem::submultiplicative(int upto) const {
  for (int n = 1; n <= upto; ++n) {
    for (int m = 1; m + n <= upto; ++m) {
      if (a(n) * a(m) > a(n + m) * (1.0 + 1e-12)) return false;
      if (b(n) * b(m) > b(n + m) * (1.0 + 1e-12)) return false;
    }
  }
  return true;
}

bool WeightSystem::summable() const {
  // geometric weights: ratio of consecutive terms of sum a_n^{-d}
  const double ra = std::pow(a_base, -d);
  const double rb = std::pow(b_base, -d);
  return ra < 1.0 && rb < 1.0;
}

double hp_norm_squared(const GradedSeries& f, int p, const WeightSystem& w) {
  double acc = 0.0;
  for (const auto& [alpha, c] : f.coefficients()) {
    double weight = std::pow(w.b(alpha.degree()), -p);
    for (std::size_t j = 0; j < alpha.support_size(); ++j) {
      if (alpha[j] > 0) {
        weight *= std::pow(w.a(static_cast<int>(j) + 1), -p * alpha[j]);
      }
    }
    acc += std::norm(c) * weight;
  }
  return acc;
}

double hp_norm(const GradedSeries& f, int p, const WeightSystem& w) {
  return std::sqrt(hp_norm_squared(f, p, w));
}

GradedSeries convolve(const GradedSeries& f, const GradedSeries& g) {
  return f.convolve(g);
}

VageConstants vage_constant(int p, int q, const WeightSystem& w, int max_vars,
                            int max_degree) {
  const int r = p - q;
  if (r <= w.d) {
    throw std::invalid_argument(
        "vage_constant: requires p - q > d (inadmissible gap)");
  }
  VageConstants out;

  // power sums of x_j = a_j^{-r}, truncated once negligible
  std::vector<double> x;
  for (int j = 1; j <= max_vars; ++j) {
    const double v = std::pow(w.a(j), -r);
    if (v < 1e-18) break;
    x.push_back(v);
  }

  // product form: sum_alpha a_alpha^{-r} = prod_j 1/(1 - x_j)
  double a_sum = 1.0;
  for (double v : x) a_sum /= (1.0 - v);
  double b_sum = 0.0;
  for (int n = 0; n <= max_degree; ++n) {
    const double t = std::pow(w.b(n), -r);
    b_sum += t;
    if (t < 1e-18 * b_sum) break;
  }
  out.product = a_sum * b_sum;

  // tight form: sum_n b_n^{-r} h_n with h_n the complete homogeneous sums
  // of the x_j, via the Newton-type recurrence h_n = (1/n) sum p_k h_{n-k}
  std::vector<double> power_sums(max_degree + 1, 0.0);
  for (int k = 1; k <= max_degree; ++k) {
    double s = 0.0;
    for (double v : x) s += std::pow(v, k);
    power_sums[k] = s;
    if (s < 1e-18) break;
  }
  std::vector<double> h(max_degree + 1, 0.0);
  h[0] = 1.0;
  double tight = std::pow(w.b(0), -r) * h[0];
  for (int n = 1; n <= max_degree; ++n) {
    double acc = 0.0;
    for (int k = 1; k <= n; ++k) acc += power_sums[k] * h[n - k];
    h[n] = acc / n;
    const double term = std::pow(w.b(n), -r) * h[n];
    tight += term;
    if (term < 1e-18 * tight) break;
  }
  out.tight = tight;
  return out;
}

VageReport verify_vage(const GradedSeries& f, const GradedSeries& g, int p, int q,
                       const WeightSystem& w) {
  const VageConstants c = vage_constant(p, q, w);
  VageReport rep;
  rep.lhs = hp_norm(f.convolve(g), p, w);
  rep.rhs = std::sqrt(c.tight) * hp_norm(f, q, w) * hp_norm(g, p, w);
  rep.ratio = (rep.rhs > 0.0) ? rep.lhs / rep.rhs : 0.0;
  rep.pass = rep.lhs <= rep.rhs * (1.0 + 1e-12);
  return rep;
}

} // namespace greynoise
