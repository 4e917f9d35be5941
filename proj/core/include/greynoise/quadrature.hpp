#pragma once

#include <cmath>
#include <functional>
#include <stdexcept>

#include "greynoise/errors.hpp"

namespace greynoise {

// Adaptive Gauss-Kronrod (7-15) quadrature on a finite interval.
// Splits the worst interval until the accumulated Kronrod error estimate
// drops below max(abs_tol, rel_tol * |integral|).
struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;   // accumulated error estimate
  int evaluations = 0;
};

QuadratureResult integrate_gk(const std::function<double(double)>& f,
                              double a, double b,
                              double abs_tol = 1e-12, double rel_tol = 1e-12,
                              int max_intervals = 4000);

// Convenience wrapper that throws accuracy_error when the tolerance was
// not met.
double integrate_or_throw(const std::function<double(double)>& f,
                          double a, double b,
                          double abs_tol = 1e-12, double rel_tol = 1e-12,
                          int max_intervals = 4000);

// Single 15-point Kronrod evaluation, no refinement. For composite schemes
// whose panel size already resolves the integrand.
QuadratureResult gk15_once(const std::function<double(double)>& f, double a, double b);

} // namespace greynoise
