#include "greynoise/marginals.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "greynoise/errors.hpp"
#include "greynoise/quadrature.hpp"
#include "greynoise/special.hpp"

namespace greynoise {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kMaxWindow = 6000.0;

// Analytic components peeled off the Mittag-Leffler characteristic
// function so that the numerically inverted residual decays like y^-6:
//   psi_a(y) = A1/(B^2+y^2) + A2/(B^2+y^2)^2
// with the closed-form transforms
//   (A1/2B) e^{-B|x|}  and  (A2/4B^3)(1 + B|x|) e^{-B|x|}.
// The coefficients match the first two algebraic orders of
// E_alpha(-y^2/2) = 2 a1/y^2 + 4 a2/y^4 + O(y^-6).
struct TailSplit {
  bool active = false;
  double a1 = 0.0;          // A1
  double a2 = 0.0;          // A2
  double scale = 2.0;       // B

  double characteristic(double y) const {
    const double q = scale * scale + y * y;
    return a1 / q + a2 / (q * q);
  }
  double density(double x) const {
    const double ax = std::abs(x);
    const double e = std::exp(-scale * ax);
    return 0.5 * a1 / scale * e +
           0.25 * a2 / (scale * scale * scale) * (1.0 + scale * ax) * e;
  }
};

TailSplit make_split(const MLFunction& phi) {
  TailSplit s;
  if (phi.kind() == MLFunction::Kind::MittagLeffler && phi.alpha() < 1.0) {
    s.active = true;
    const double alpha = phi.alpha();
    const double b2 = s.scale * s.scale;
    const double c1 = reciprocal_gamma(1.0 - alpha);
    const double c2 = -reciprocal_gamma(1.0 - 2.0 * alpha);
    s.a1 = 2.0 * c1;
    s.a2 = 4.0 * c2 + s.a1 * b2;
  }
  return s;
}

} // namespace

double MarginalDensity1D::value_at(double x) const {
  if (x < x_min || x > x_max || values.size() < 2) return 0.0;
  const double t = (x - x_min) / dx();
  const std::size_t k = std::min(static_cast<std::size_t>(t), values.size() - 2);
  const double frac = t - static_cast<double>(k);
  return values[k] * (1.0 - frac) + values[k + 1] * frac;
}

MarginalDensity1D density_1d(const MLFunction& phi, const GridSpec& spec) {
  if (spec.points < 3 || spec.points % 2 == 0) {
    throw std::invalid_argument("density_1d: points must be odd and >= 3");
  }
  const TailSplit split = make_split(phi);
  auto residual = [&](double y) {
    const double psi = phi.eval_neg_axis(0.5 * y * y);
    return split.active ? psi - split.characteristic(y) : psi;
  };

  // enlarge the inversion window until the (residual) characteristic
  // function is below the floor at the boundary
  double window = spec.y_max;
  for (;;) {
    double boundary;
    try {
      boundary = std::abs(residual(window));
    } catch (const accuracy_error&) {
      std::ostringstream os;
      os << "density_1d: characteristic function not evaluable at window " << window
         << "; no decaying-axis route for this phi";
      throw accuracy_error(os.str());
    }
    if (boundary < spec.char_tail_floor) break;
    if (window >= kMaxWindow) {
      std::ostringstream os;
      os << "density_1d: characteristic tail " << boundary << " at y = " << window
         << " still above " << spec.char_tail_floor
         << "; suggested window > " << 2.0 * window
         << " (the transform may have an atomic component)";
      throw accuracy_error(os.str());
    }
    window = std::min(2.0 * window, kMaxWindow);
  }

  const int samples = static_cast<int>(window * spec.y_points_per_unit);
  const double dy = window / samples;
  std::vector<double> psi_r(samples + 1);
  for (int m = 0; m <= samples; ++m) psi_r[m] = residual(m * dy);

  MarginalDensity1D out;
  out.x_min = -spec.x_max;
  out.x_max = spec.x_max;
  out.values.resize(spec.points);

  // f(x) = analytic(x) + (1/pi) Int_0^Y cos(x y) psi_r(y) dy (trapezoid);
  // f is even, so only x >= 0 is transformed and the rest mirrored
  const int mid = (spec.points - 1) / 2;
  for (int k = mid; k < spec.points; ++k) {
    const double x = out.x_at(k);
    double acc = 0.5 * psi_r[0];
    for (int m = 1; m < samples; ++m) acc += std::cos(x * m * dy) * psi_r[m];
    acc += 0.5 * std::cos(x * window) * psi_r[samples];
    double v = acc * dy / kPi;
    if (split.active) v += split.density(x);
    out.values[k] = v;
    out.values[spec.points - 1 - k] = v;
  }

  // clip ringing negativity within tolerance, reject beyond
  for (double& v : out.values) {
    if (v < 0.0) {
      if (v < -1e-9) {
        std::ostringstream os;
        os << "density_1d: negative density " << v
           << " beyond the clip tolerance; inversion window misconfigured";
        throw accuracy_error(os.str());
      }
      out.clipped_negativity = std::min(out.clipped_negativity, v);
      v = 0.0;
    }
  }

  double mass = 0.5 * (out.values.front() + out.values.back());
  for (std::size_t k = 1; k + 1 < out.values.size(); ++k) mass += out.values[k];
  out.total_mass = mass * out.dx();
  if (std::abs(out.total_mass - 1.0) > 1e-6) {
    std::ostringstream os;
    os << "density_1d: total mass " << out.total_mass
       << " deviates from 1 beyond 1e-6; enlarge the x-grid";
    throw accuracy_error(os.str());
  }
  return out;
}

double moment_quadrature_1d(const MLFunction& phi, int n, GridSpec spec) {
  if (n < 0) throw std::invalid_argument("moment_quadrature_1d: requires n >= 0");
  // the x^{2n} weight amplifies the inversion ringing floor; push the
  // characteristic tail far below the moment tolerance
  spec.char_tail_floor = std::min(spec.char_tail_floor, 1e-12);
  for (int attempt = 0; attempt < 5; ++attempt) {
    const MarginalDensity1D d = density_1d(phi, spec);
    // composite Simpson of x^{2n} f(x)
    const double h = d.dx();
    auto term = [&](std::size_t k) {
      return std::pow(d.x_at(k), 2 * n) * d.values[k];
    };
    double sum = term(0) + term(d.size() - 1);
    for (std::size_t k = 1; k + 1 < d.size(); ++k) {
      sum += term(k) * ((k % 2 == 1) ? 4.0 : 2.0);
    }
    const double integral = sum * h / 3.0;
    // boundary monitor: the integrand at the edge, scaled by one more
    // window width, must be negligible
    const double edge = std::max(term(0), term(d.size() - 1)) * spec.x_max;
    if (edge <= 1e-6 * std::max(integral, 1e-12)) return integral;
    spec.x_max *= 1.5;
    spec.points = spec.points * 3 / 2;
    if (spec.points % 2 == 0) ++spec.points;
  }
  throw accuracy_error(
      "moment_quadrature_1d: x-window tail contribution above tolerance; "
      "moment may not converge on a feasible grid");
}

std::vector<double> sample_1d(const MarginalDensity1D& density, std::size_t count,
                              std::uint64_t seed) {
  if (density.size() < 2) throw std::invalid_argument("sample_1d: invalid density");
  // cumulative trapezoid, normalized
  std::vector<double> cdf(density.size(), 0.0);
  for (std::size_t k = 1; k < density.size(); ++k) {
    cdf[k] = cdf[k - 1] + 0.5 * (density.values[k - 1] + density.values[k]) * density.dx();
  }
  const double total = cdf.back();
  if (total <= 0.0) throw std::invalid_argument("sample_1d: zero-mass density");
  for (double& c : cdf) c /= total;

  std::mt19937_64 rng(seed);
  std::vector<double> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double u =
        static_cast<double>(rng() >> 11) * (1.0 / 9007199254740992.0);
    const auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    std::size_t k = static_cast<std::size_t>(std::distance(cdf.begin(), it));
    if (k == 0) k = 1;
    if (k >= cdf.size()) k = cdf.size() - 1;
    const double seg = cdf[k] - cdf[k - 1];
    const double frac = (seg > 0.0) ? (u - cdf[k - 1]) / seg : 0.0;
    out.push_back(density.x_at(k - 1) + frac * density.dx());
  }
  return out;
}

double density_2d_radial(const MLFunction& phi, double r, double y_max) {
  if (r < 0.0) throw std::invalid_argument("density_2d_radial: requires r >= 0");
  double window = y_max;
  while (std::abs(phi.eval_neg_axis(0.5 * window * window)) * window > 1e-8) {
    if (window >= kMaxWindow) {
      throw accuracy_error("density_2d_radial: characteristic tail above tolerance");
    }
    window = std::min(2.0 * window, kMaxWindow);
  }
  auto integrand = [&](double rho) {
    return std::cyl_bessel_j(0.0, r * rho) * phi.eval_neg_axis(0.5 * rho * rho) * rho;
  };
  return integrate_or_throw(integrand, 0.0, window, 1e-12, 1e-10, 8000) / (2.0 * kPi);
}

} // namespace greynoise
