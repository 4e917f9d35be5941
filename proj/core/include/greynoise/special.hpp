#pragma once

#include <stdexcept>

namespace greynoise {

// Gamma function on the real line, poles excluded. Lanczos approximation
// (g = 7, 9 terms), reflection formula for x < 0.5. This is the primary
// routine feeding the Mittag-Leffler Taylor coefficients.
double gamma_fn(double x);

// log Gamma for x > 0, Lanczos-based.
double log_gamma(double x);

// 1/Gamma(x), finite everywhere; returns 0 at the poles x = 0, -1, -2, ...
double reciprocal_gamma(double x);

// Independent cross-check of gamma_fn: Stirling series with upward
// recursion for small arguments. Kept deliberately free of Lanczos code.
double gamma_stirling_oracle(double x);

// Mittag-Leffler function on the negative real axis: E_alpha(-t), t >= 0,
// 0 < alpha <= 1. Taylor summation for small t; for larger t the monotone
// integral representation
//   E_alpha(-t) = sin(pi alpha)/(pi alpha)
//                 * Int_0^inf exp(-(t v)^(1/alpha)) / (v^2 + 2 v cos(pi alpha) + 1) dv
// and, when applicable, the algebraic asymptotic series
//   E_alpha(-t) ~ sum_{k>=1} (-1)^{k+1} t^{-k} / Gamma(1 - alpha k).
double mittag_leffler_neg(double alpha, double t);

// Leading asymptotic terms of E_alpha(-t); used for characteristic-function
// tail splitting. Returns sum_{k=1}^{terms} (-1)^{k+1} t^{-k}/Gamma(1-alpha k).
double mittag_leffler_neg_asymptotic(double alpha, double t, int terms);

} // namespace greynoise
