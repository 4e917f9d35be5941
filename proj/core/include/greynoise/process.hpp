#pragma once

#include <functional>
#include <vector>

#include "greynoise/kondratiev.hpp"
#include "greynoise/mlfun.hpp"
#include "greynoise/series.hpp"

namespace greynoise {

// Orthonormal Hermite function of degree j in L2(R, dx):
//   zeta_j(t) = (2^j j! sqrt(pi))^{-1/2} H_j(t) exp(-t^2/2),
// evaluated by upward recurrence with a carried binary exponent so that the
// Gaussian start can underflow without destroying large-j values.
double hermite_fn(int j, double t);

// zeta_0..zeta_jmax at one point, single recurrence pass
std::vector<double> hermite_fn_all(int jmax, double t);

// Gauss-Hermite rule (weight exp(-x^2)) by Golub-Welsch. scaled_weights
// carries w_k exp(x_k^2) = 1/(n zeta_{n-1}(x_k)^2), which stays relatively
// accurate at the extreme nodes where w_k itself underflows.
struct GaussHermiteRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> scaled_weights;
};
GaussHermiteRule gauss_hermite(int n);

// <zeta_i, zeta_j> by Gauss-Hermite quadrature (exact for the polynomial
// part when the rule has more than (i+j)/2 nodes).
double hermite_l2_inner(int i, int j, const GaussHermiteRule& rule);

struct HermiteBoundsReport {
  double c_osc = 0.0;        // sup over |t| <= 2 sqrt(j) of |zeta_j| j^{1/12}
  double a_sup = 0.0;        // global sup |zeta_j|
  double gamma_decay = 0.0;  // decay rate fitted beyond 2 sqrt(j)
  double c_lip = 0.0;        // difference-quotient envelope slope in sqrt(j)
  double d_lip = 0.0;        // envelope offset
  bool pass = false;         // all constants finite, gamma > 0, no violation
};

// Fits the minimal envelope constants over j <= jmax on grids |t| <= 3
// sqrt(j) and re-sweeps the envelopes.
HermiteBoundsReport verify_hermite_bounds(int jmax);

// Int_0^t zeta_j by adaptive quadrature.
double hermite_integral(int j, double t);

// Integrals for all j = 0..jmax at once through the neighbor-derivative
// recurrence  I_{j+1} = sqrt(j/(j+1)) I_{j-1} - sqrt(2/(j+1)) (zeta_j(t) - zeta_j(0));
// the independent cross-check of hermite_integral.
std::vector<double> hermite_integrals_upto(int jmax, double t);

// Element of the chaos algebra supported on degree-1 indices: coefficient
// of the j-th coordinate variable for j < basis_size.
struct ProcessElement {
  GradedSeries series;
  double time = 0.0;
  int basis_size = 0;
};

// Associated process at time t, truncated to J basis functions: coefficient
// of the j-th coordinate is Int_0^t zeta_j / sqrt(c_1).
ProcessElement process_element(double t, int J, const MLFunction& phi);

// Distributional derivative: coefficient zeta_j(t) / sqrt(c_1).
ProcessElement noise_element(double t, int J, const MLFunction& phi);

// H_p norm of (X(t+h) - X(t))/h - N(t); decays linearly in h.
double diff_quotient_error(double t, double h, int J, const MLFunction& phi,
                           const WeightSystem& w, int p);

// Riemann sum of f(t) wick N(t) over [0, 1] with `mesh` midpoint panels,
// pairwise-reduced for a deterministic summation order.
GradedSeries wick_riemann_integral(const std::function<GradedSeries(double)>& f,
                                   int mesh, int J, const MLFunction& phi);

} // namespace greynoise
