#include "greynoise/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "greynoise/errors.hpp"
#include "greynoise/quadrature.hpp"

namespace greynoise {

namespace {

constexpr double kPi = 3.14159265358979323846;

// E1(x) = (e^{ix} - 1)/(ix), smooth through 0
std::complex<double> phase_ratio(double x) {
  if (std::abs(x) < 0.5) {
    // series sum (ix)^k/(k+1)!
    std::complex<double> term = 1.0, acc = 1.0;
    const std::complex<double> ix(0.0, x);
    for (int k = 1; k < 16; ++k) {
      term *= ix / static_cast<double>(k + 1);
      acc += term;
      if (std::abs(term) < 1e-18) break;
    }
    return acc;
  }
  const std::complex<double> ix(0.0, x);
  return (std::exp(ix) - 1.0) / ix;
}

// integrand (e^{itu}-1)(e^{-isu}-1)/u^2 = t s E1(tu) E1(-su)
std::complex<double> covariance_integrand(double t, double s, double u) {
  return t * s * phase_ratio(t * u) * phase_ratio(-s * u);
}

// (1 - e^{itu})/u^2 = -it E1(tu) / u : keep only the even (real) part for
// symmetric quadrature; the odd 1/u part cancels by symmetry. 1 - cos is
// written as 2 sin^2 so the u -> 0 region carries no cancellation noise
// (the singular fBm densities amplify any such noise).
double r_integrand_even(double t, double u) {
  if (u == 0.0) return 0.5 * t * t;
  const double s = std::sin(0.5 * t * u);
  return 2.0 * s * s / (u * u);
}

} // namespace

IntervalUnion::IntervalUnion(std::vector<std::pair<double, double>> intervals) {
  for (auto& [lo, hi] : intervals) {
    if (lo > hi) throw std::invalid_argument("IntervalUnion: inverted interval");
  }
  std::sort(intervals.begin(), intervals.end());
  for (const auto& iv : intervals) {
    if (!parts_.empty() && iv.first <= parts_.back().second) {
      parts_.back().second = std::max(parts_.back().second, iv.second);
    } else {
      parts_.push_back(iv);
    }
  }
}

double IntervalUnion::total_length() const {
  double len = 0.0;
  for (const auto& [lo, hi] : parts_) len += hi - lo;
  return len;
}

IntervalUnion IntervalUnion::intersect(const IntervalUnion& other) const {
  std::vector<std::pair<double, double>> out;
  std::size_t i = 0, j = 0;
  while (i < parts_.size() && j < other.parts_.size()) {
    const double lo = std::max(parts_[i].first, other.parts_[j].first);
    const double hi = std::min(parts_[i].second, other.parts_[j].second);
    if (lo <= hi) out.emplace_back(lo, hi);
    if (parts_[i].second < other.parts_[j].second) {
      ++i;
    } else {
      ++j;
    }
  }
  return IntervalUnion(std::move(out));
}

SpectralMeasure SpectralMeasure::lebesgue() {
  SpectralMeasure m;
  m.kind_ = Kind::Lebesgue;
  return m;
}

SpectralMeasure SpectralMeasure::fbm(double hurst) {
  if (!(hurst > 0.0 && hurst < 1.0)) {
    throw std::invalid_argument("SpectralMeasure::fbm: requires 0 < H < 1");
  }
  SpectralMeasure m;
  m.kind_ = Kind::Fbm;
  m.hurst_ = hurst;
  return m;
}

SpectralMeasure SpectralMeasure::atomic(std::vector<std::pair<double, double>> atoms) {
  for (const auto& [u, mass] : atoms) {
    if (mass < 0.0) throw std::invalid_argument("SpectralMeasure: negative mass");
  }
  SpectralMeasure m;
  m.kind_ = Kind::Atomic;
  m.atoms_ = std::move(atoms);
  return m;
}

SpectralMeasure SpectralMeasure::density(std::function<double(double)> rho,
                                         double window) {
  if (!(window > 0.0)) throw std::invalid_argument("SpectralMeasure: bad window");
  SpectralMeasure m;
  m.kind_ = Kind::Density;
  m.rho_ = std::move(rho);
  m.window_ = window;
  return m;
}

double SpectralMeasure::density_at(double u) const {
  switch (kind_) {
    case Kind::Lebesgue:
      return 1.0;
    case Kind::Fbm:
      return std::pow(std::abs(u), 1.0 - 2.0 * hurst_);
    case Kind::Density:
      return rho_(u);
    case Kind::Atomic:
      throw std::logic_error("SpectralMeasure: atomic measure has no density");
  }
  return 0.0;
}

double SpectralMeasure::interval_mass(double lo, double hi) const {
  if (lo > hi) throw std::invalid_argument("interval_mass: inverted interval");
  switch (kind_) {
    case Kind::Lebesgue:
      return hi - lo;
    case Kind::Fbm: {
      // antiderivative of |u|^{1-2H}: sign(u) |u|^{2-2H} / (2-2H)
      const double e = 2.0 - 2.0 * hurst_;
      auto anti = [&](double u) {
        return (u >= 0.0 ? 1.0 : -1.0) * std::pow(std::abs(u), e) / e;
      };
      return anti(hi) - anti(lo);
    }
    case Kind::Atomic: {
      double m = 0.0;
      for (const auto& [u, mass] : atoms_) {
        if (u >= lo && u <= hi) m += mass;
      }
      return m;
    }
    case Kind::Density:
      return integrate_or_throw(rho_, lo, hi, 1e-12, 1e-10);
  }
  return 0.0;
}

double SpectralMeasure::mass_of(const IntervalUnion& set) const {
  double m = 0.0;
  for (const auto& [lo, hi] : set.parts()) m += interval_mass(lo, hi);
  return m;
}

bool SpectralMeasure::admissible() const {
  if (kind_ == Kind::Atomic) {
    return true;   // finite mass
  }
  const double v = integrate_or_throw(
      [&](double u) { return density_at(u) / (1.0 + u * u); }, -window_, window_,
      1e-10, 1e-8, 8000);
  return std::isfinite(v);
}

double interval_covariance(const IntervalUnion& a, const IntervalUnion& b,
                           const SpectralMeasure& mu, double c1) {
  return c1 * mu.mass_of(a.intersect(b));
}

namespace {

// closed-form Int_U^inf rho(u)/u^2 du for the kinds with algebraic tails
double tail_mass(const SpectralMeasure& mu, double big_u) {
  switch (mu.kind()) {
    case SpectralMeasure::Kind::Lebesgue:
      return 1.0 / big_u;
    case SpectralMeasure::Kind::Fbm:
      return std::pow(big_u, -2.0 * mu.hurst()) / (2.0 * mu.hurst());
    default:
      return 0.0;
  }
}

// q(u) = rho(u)/u^2 and its derivative at the window edge
double q_at(const SpectralMeasure& mu, double u) {
  return mu.density_at(u) / (u * u);
}

double q_prime_at(const SpectralMeasure& mu, double u) {
  switch (mu.kind()) {
    case SpectralMeasure::Kind::Lebesgue:
      return -2.0 / (u * u * u);
    case SpectralMeasure::Kind::Fbm: {
      const double e = -1.0 - 2.0 * mu.hurst();
      return e * std::pow(u, e - 1.0);
    }
    default:
      return 0.0;
  }
}

// 2 Int_U^inf cos(a u) q(u) du by two integrations by parts
double oscillatory_tail(const SpectralMeasure& mu, double a, double big_u) {
  a = std::abs(a);
  if (a < 1e-9) return 2.0 * tail_mass(mu, big_u);
  const double q = q_at(mu, big_u);
  const double qp = q_prime_at(mu, big_u);
  return 2.0 * (-std::sin(a * big_u) * q / a - std::cos(a * big_u) * qp / (a * a));
}

bool has_algebraic_tail(const SpectralMeasure& mu) {
  return mu.kind() == SpectralMeasure::Kind::Lebesgue ||
         mu.kind() == SpectralMeasure::Kind::Fbm;
}

// integral of f(u) rho(u) du over [0, window]; the fBm density power at 0
// is regularized by the substitution u = w^{1/(2-2H)} (which absorbs the
// density exactly), then fixed sub-wavelength Kronrod panels carry the
// oscillatory stretch
double measure_half_integral(const SpectralMeasure& mu,
                             const std::function<double(double)>& f,
                             double osc_scale) {
  const double window = mu.window();
  const double panel = std::min(1.0, kPi / (4.0 * std::max(1.0, osc_scale)));
  const double cut = std::min(0.5, window);
  double total = 0.0, err = 0.0;
  if (mu.kind() == SpectralMeasure::Kind::Fbm) {
    const double p = 1.0 / (2.0 - 2.0 * mu.hurst());
    const double w_hi = std::pow(cut, 1.0 / p);
    total += p * integrate_or_throw(
                     [&](double w) { return f(std::pow(w, p)); }, 0.0, w_hi,
                     1e-12, 1e-10, 8000);
  } else {
    total += integrate_or_throw([&](double u) { return f(u) * mu.density_at(u); },
                                0.0, cut, 1e-12, 1e-10, 8000);
  }
  auto weighted = [&](double u) { return f(u) * mu.density_at(u); };
  for (double a = cut; a < window; a += panel) {
    const double b = std::min(a + panel, window);
    const QuadratureResult r = gk15_once(weighted, a, b);
    total += r.value;
    err += r.error;
  }
  if (err > 1e-7 * std::max(1.0, std::abs(total))) {
    throw accuracy_error("spectral quadrature: panel error estimate too large");
  }
  return total;
}

} // namespace

std::complex<double> spectral_covariance(double t, double s,
                                         const SpectralMeasure& mu) {
  if (t == 0.0 || s == 0.0) return 0.0;

  if (mu.kind() == SpectralMeasure::Kind::Atomic) {
    std::complex<double> acc = 0.0;
    for (const auto& [u, mass] : mu.atoms()) {
      if (std::abs(u) < 1e-12) {
        acc += mass * t * s;
      } else {
        acc += mass * covariance_integrand(t, s, u);
      }
    }
    return acc;
  }

  const double osc = std::max({std::abs(t), std::abs(s), std::abs(t - s)});
  const double re = measure_half_integral(
      mu,
      [&](double u) {
        return covariance_integrand(t, s, u).real() +
               covariance_integrand(t, s, -u).real();
      },
      osc);
  // built-in symmetric measures kill the odd imaginary part exactly
  double im = 0.0;
  if (mu.kind() == SpectralMeasure::Kind::Density) {
    im = measure_half_integral(
        mu,
        [&](double u) {
          return covariance_integrand(t, s, u).imag() +
                 covariance_integrand(t, s, -u).imag();
        },
        osc);
  }

  std::complex<double> value(re, im);
  if (has_algebraic_tail(mu)) {
    const double big_u = mu.window();
    // (e^{iu(t-s)} - e^{itu} - e^{-isu} + 1) rho/u^2 beyond the window;
    // the symmetric measure keeps only cosines
    double tail = 2.0 * tail_mass(mu, big_u);
    tail += oscillatory_tail(mu, t - s, big_u);
    tail -= oscillatory_tail(mu, t, big_u);
    tail -= oscillatory_tail(mu, s, big_u);
    value += tail;
  } else if (mu.kind() == SpectralMeasure::Kind::Density) {
    const double leftover = 4.0 * q_at(mu, mu.window()) * mu.window();
    if (leftover > 1e-6 * std::abs(value)) {
      throw accuracy_error(
          "spectral_covariance: density window tail above tolerance; enlarge "
          "the window");
    }
  }
  return value;
}

std::complex<double> r_transform(double t, const SpectralMeasure& mu) {
  if (t == 0.0) return 0.0;
  if (mu.kind() == SpectralMeasure::Kind::Atomic) {
    std::complex<double> acc = 0.0;
    for (const auto& [u, mass] : mu.atoms()) {
      if (std::abs(u) < 1e-12) {
        acc += mass * 0.5 * t * t;   // limit of (1 - e^{itu})/u^2
      } else {
        const std::complex<double> e(std::cos(t * u), std::sin(t * u));
        acc += mass * (1.0 - e) / (u * u);
      }
    }
    return acc;
  }
  const double re = measure_half_integral(
      mu, [&](double u) { return 2.0 * r_integrand_even(t, u); }, std::abs(t));
  double value = re;
  if (has_algebraic_tail(mu)) {
    const double big_u = mu.window();
    value += 2.0 * tail_mass(mu, big_u) - oscillatory_tail(mu, t, big_u);
  }
  return value;   // imaginary part vanishes for symmetric measures
}

FbmRatioReport fbm_covariance_check(double hurst, const std::vector<double>& grid) {
  const SpectralMeasure mu = SpectralMeasure::fbm(hurst);
  FbmRatioReport rep;
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0, sum = 0.0;
  for (double t : grid) {
    for (double s : grid) {
      const double shape = std::pow(std::abs(t), 2.0 * hurst) +
                           std::pow(std::abs(s), 2.0 * hurst) -
                           std::pow(std::abs(t - s), 2.0 * hurst);
      if (std::abs(shape) < 1e-9) continue;
      const double ratio = spectral_covariance(t, s, mu).real() / shape;
      rep.ratios.push_back(ratio);
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      sum += ratio;
    }
  }
  if (rep.ratios.empty()) {
    throw std::invalid_argument("fbm_covariance_check: degenerate grid");
  }
  rep.mean_ratio = sum / static_cast<double>(rep.ratios.size());
  rep.relative_spread = (hi - lo) / std::abs(rep.mean_ratio);
  rep.pass = rep.relative_spread < 1e-3;
  return rep;
}

} // namespace greynoise
