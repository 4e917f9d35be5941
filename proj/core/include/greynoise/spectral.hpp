#pragma once

#include <complex>
#include <functional>
#include <utility>
#include <vector>

namespace greynoise {

// Disjoint sorted closed intervals on the real line.
class IntervalUnion {
public:
  IntervalUnion() = default;
  // overlapping or touching inputs are merged
  explicit IntervalUnion(std::vector<std::pair<double, double>> intervals);

  const std::vector<std::pair<double, double>>& parts() const { return parts_; }
  double total_length() const;
  IntervalUnion intersect(const IntervalUnion& other) const;

private:
  std::vector<std::pair<double, double>> parts_;
};

// Positive measure on the line driving the covariance integrals.
class SpectralMeasure {
public:
  enum class Kind { Lebesgue, Fbm, Atomic, Density };

  static SpectralMeasure lebesgue();
  static SpectralMeasure fbm(double hurst);   // density |u|^{1-2H}, 0 < H < 1
  static SpectralMeasure atomic(std::vector<std::pair<double, double>> atoms);
  static SpectralMeasure density(std::function<double(double)> rho, double window);

  Kind kind() const { return kind_; }
  double hurst() const { return hurst_; }
  double window() const { return window_; }
  const std::vector<std::pair<double, double>>& atoms() const { return atoms_; }

  double density_at(double u) const;          // not for Atomic
  double interval_mass(double lo, double hi) const;
  double mass_of(const IntervalUnion& set) const;

  // 1/(1+u^2)-integrability test over the window (admissibility)
  bool admissible() const;

private:
  Kind kind_ = Kind::Lebesgue;
  double hurst_ = 0.5;
  double window_ = 200.0;
  std::vector<std::pair<double, double>> atoms_;
  std::function<double(double)> rho_;
};

// <Q_{1_A}, Q_{1_B}> = c1 * mu(A intersect B).
double interval_covariance(const IntervalUnion& a, const IntervalUnion& b,
                           const SpectralMeasure& mu, double c1);

// K(t, s) = Int (e^{itu} - 1)/u * (e^{-isu} - 1)/u dmu(u); real for the
// symmetric built-in measures. The removable singularity at u = 0 carries
// the limit t*s; beyond the window an algebraic tail correction (constant
// part in closed form, oscillatory part by integration by parts) is added
// for the Lebesgue and fBm kinds.
std::complex<double> spectral_covariance(double t, double s, const SpectralMeasure& mu);

// r(t) = Int (1 - e^{itu})/u^2 dmu(u); K(t,s) = r(t) + conj(r(s)) - r(t-s).
std::complex<double> r_transform(double t, const SpectralMeasure& mu);

struct FbmRatioReport {
  double mean_ratio = 0.0;
  double relative_spread = 0.0;   // (max-min)/mean over the grid
  bool pass = false;              // spread below 1e-3
  std::vector<double> ratios;
};

// Ratio K(t,s) / (t^{2H} + s^{2H} - |t-s|^{2H}) over the grid; constant for
// the fBm spectral density.
FbmRatioReport fbm_covariance_check(double hurst, const std::vector<double>& grid);

} // namespace greynoise
