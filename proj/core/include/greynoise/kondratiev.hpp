#pragma once

#include <vector>

#include "greynoise/series.hpp"

namespace greynoise {

// Weight system (a_j), (b_n) defining the H_p(a, b) scale. Variables are
// 1-based in the weights (a_1, a_2, ...); code maps the multi-index
// position j to a(j + 1). d is the summability exponent: sum a_n^{-d} and
// sum b_n^{-d} must be finite.
struct WeightSystem {
  double a_base = 2.0;   // a_j = a_base^j
  double b_base = 2.0;   // b_n = b_base^n
  int d = 2;

  static WeightSystem geometric(double a_base = 2.0, double b_base = 2.0, int d = 2);

  double a(int j) const;   // j >= 1
  double b(int n) const;   // n >= 0

  // a_n a_m <= a_{n+m} and b_n b_m <= b_{n+m} on a prefix
  bool submultiplicative(int upto = 16) const;
  // partial-sum ratio test of sum a_n^{-d}, sum b_n^{-d}
  bool summable() const;
};

// sqrt of sum_n b_n^{-p} sum_{|alpha|=n} |f_alpha|^2 prod_j a_j^{-p alpha_j};
// defined as the square root of the displayed sum so that it is a norm.
double hp_norm(const GradedSeries& f, int p, const WeightSystem& w);
double hp_norm_squared(const GradedSeries& f, int p, const WeightSystem& w);

// Exact coefficient convolution; the same formula as the Wick product.
GradedSeries convolve(const GradedSeries& f, const GradedSeries& g);

struct VageConstants {
  double tight = 0.0;     // sum_alpha (a_alpha b_{|alpha|})^{-(p-q)}
  double product = 0.0;   // (sum_alpha a_alpha^{-(p-q)}) (sum_n b_n^{-(p-q)})
};

// Both constants, truncated sums with tail control; requires p - q > d
// (inadmissible-gap error otherwise). tight <= product always.
VageConstants vage_constant(int p, int q, const WeightSystem& w,
                            int max_vars = 200, int max_degree = 400);

struct VageReport {
  double lhs = 0.0;     // |f * g|_p
  double rhs = 0.0;     // sqrt(tight) |f|_q |g|_p
  double ratio = 0.0;   // lhs / rhs
  bool pass = false;    // lhs <= rhs (1 + 1e-12)
};

VageReport verify_vage(const GradedSeries& f, const GradedSeries& g, int p, int q,
                       const WeightSystem& w);

} // namespace greynoise
