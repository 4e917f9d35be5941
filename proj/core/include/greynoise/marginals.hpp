#pragma once

#include <cstdint>
#include <vector>

#include "greynoise/mlfun.hpp"

namespace greynoise {

// One-dimensional marginal density of the measure generated by phi, on a
// uniform grid. Produced by Fourier inversion of y -> phi(-y^2/2).
struct MarginalDensity1D {
  double x_min = 0.0;
  double x_max = 0.0;
  std::vector<double> values;       // density at the grid points
  double total_mass = 0.0;          // trapezoid mass over the grid
  double clipped_negativity = 0.0;  // worst negative value clipped to zero

  std::size_t size() const { return values.size(); }
  double x_at(std::size_t k) const {
    return x_min + (x_max - x_min) * static_cast<double>(k) /
                       static_cast<double>(values.size() - 1);
  }
  double dx() const { return (x_max - x_min) / static_cast<double>(values.size() - 1); }
  // linear interpolation between grid points, 0 outside
  double value_at(double x) const;
};

struct GridSpec {
  double x_max = 12.0;     // symmetric grid [-x_max, x_max]
  // odd, so x = 0 is a grid point; fine enough that the cusp several of
  // these densities have at the origin stays below the mass tolerance
  int points = 9601;
  // inversion window parameters; the window grows adaptively from y_max
  // until the residual characteristic function is below char_tail_floor
  double y_max = 40.0;
  int y_points_per_unit = 64;
  double char_tail_floor = 1e-8;
};

// Density by discrete Fourier inversion. For Mittag-Leffler kinds the
// slowly decaying part of the characteristic function is split off
// analytically (Cauchy-type component with closed-form transform), so that
// the numerical window stays moderate. Throws accuracy_error when the
// characteristic function does not decay below 1e-8 within the maximum
// window (the suggestion is part of the message).
MarginalDensity1D density_1d(const MLFunction& phi, const GridSpec& spec = {});

// Int x^{2n} d mu_1 by Simpson integration of the density, with an x-window
// monitor; the window is enlarged until the boundary contribution estimate
// passes or the cap is reached (then: accuracy_error).
double moment_quadrature_1d(const MLFunction& phi, int n, GridSpec spec = {});

// Inverse-CDF sampling from a tabulated density; deterministic per seed.
std::vector<double> sample_1d(const MarginalDensity1D& density, std::size_t count,
                              std::uint64_t seed);

// Radial two-dimensional marginal value at radius r (Hankel-type inversion
// of the characteristic function); density depends on |x| only.
double density_2d_radial(const MLFunction& phi, double r, double y_max = 40.0);

} // namespace greynoise
