#include "greynoise/process.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "greynoise/errors.hpp"
#include "greynoise/quadrature.hpp"

namespace greynoise {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kQuarterRootPi = 0.7511255444649425;   // pi^{-1/4}
constexpr int kMaxHermiteDegree = 8192;

// recurrence coefficients sqrt(2/(k+1)) and sqrt(k/(k+1)), precomputed so
// the inner loops carry no square roots
struct RecurrenceTable {
  std::vector<double> up, down;
  RecurrenceTable() {
    up.resize(kMaxHermiteDegree + 1);
    down.resize(kMaxHermiteDegree + 1);
    for (int k = 0; k <= kMaxHermiteDegree; ++k) {
      up[k] = std::sqrt(2.0 / (k + 1));
      down[k] = std::sqrt(static_cast<double>(k) / (k + 1));
    }
  }
};

const RecurrenceTable& table() {
  static const RecurrenceTable t;
  return t;
}

// mantissa-exponent pair walking the recurrence; value = m * 2^e
struct Scaled {
  double m0, m1;   // zeta_{j-1}, zeta_j mantissas
  long e;

  void renormalize() {
    const double mag = std::max(std::abs(m0), std::abs(m1));
    if (mag != 0.0 && mag < 0x1p-256) {
      m0 *= 0x1p256;
      m1 *= 0x1p256;
      e -= 256;
    } else if (mag > 0x1p256) {
      m0 *= 0x1p-256;
      m1 *= 0x1p-256;
      e += 256;
    }
  }
};

Scaled hermite_start(double t) {
  // zeta_0 = pi^{-1/4} exp(-t^2/2); split into mantissa * 2^e analytically
  // so that large t does not underflow before the recurrence climbs back
  const double log2_z0 = (-0.5 * t * t) * 1.4426950408889634 +
                         std::log2(kQuarterRootPi);
  const double ef = std::floor(log2_z0);
  Scaled s;
  s.e = static_cast<long>(ef);
  s.m1 = std::exp2(log2_z0 - ef);
  s.m0 = 0.0;
  return s;
}

double assemble(double m, long e) {
  if (m == 0.0) return 0.0;
  if (e < -1200) return 0.0;
  if (e > 1000) throw std::overflow_error("hermite_fn: value overflow");
  return std::ldexp(m, static_cast<int>(e));
}

} // namespace

double hermite_fn(int j, double t) {
  if (j < 0) throw std::invalid_argument("hermite_fn: requires j >= 0");
  if (j > kMaxHermiteDegree) {
    throw std::invalid_argument("hermite_fn: degree beyond the supported range");
  }
  const RecurrenceTable& tab = table();
  Scaled s = hermite_start(t);
  for (int k = 0; k < j; ++k) {
    const double next = tab.up[k] * t * s.m1 - tab.down[k] * s.m0;
    s.m0 = s.m1;
    s.m1 = next;
    s.renormalize();
  }
  return assemble(s.m1, s.e);
}

std::vector<double> hermite_fn_all(int jmax, double t) {
  if (jmax > kMaxHermiteDegree) {
    throw std::invalid_argument("hermite_fn_all: degree beyond the supported range");
  }
  const RecurrenceTable& tab = table();
  std::vector<double> out(jmax + 1);
  Scaled s = hermite_start(t);
  out[0] = assemble(s.m1, s.e);
  for (int k = 0; k < jmax; ++k) {
    const double next = tab.up[k] * t * s.m1 - tab.down[k] * s.m0;
    s.m0 = s.m1;
    s.m1 = next;
    s.renormalize();
    out[k + 1] = assemble(s.m1, s.e);
  }
  return out;
}

namespace {

// zeta_{j-1}, zeta_j, zeta_{j+1} at one point in a single pass
struct Triple {
  double below, at, above;
};

Triple hermite_triple(int j, double t) {
  const RecurrenceTable& tab = table();
  Scaled s = hermite_start(t);
  double below = 0.0;
  for (int k = 0; k < j; ++k) {
    const double next = tab.up[k] * t * s.m1 - tab.down[k] * s.m0;
    s.m0 = s.m1;
    s.m1 = next;
    s.renormalize();
  }
  below = assemble(s.m0, s.e);
  const double at = assemble(s.m1, s.e);
  const double above =
      assemble(tab.up[j] * t * s.m1 - tab.down[j] * s.m0, s.e);
  return {below, at, above};
}

} // namespace

GaussHermiteRule gauss_hermite(int n) {
  if (n < 1) throw std::invalid_argument("gauss_hermite: n >= 1 required");
  Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
  for (int k = 1; k < n; ++k) {
    const double b = std::sqrt(0.5 * k);
    jac(k, k - 1) = b;
    jac(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(jac);
  GaussHermiteRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const double sqrt_pi = std::sqrt(kPi);
  for (int k = 0; k < n; ++k) {
    rule.nodes[k] = es.eigenvalues()(k);
    const double v = es.eigenvectors()(0, k);
    rule.weights[k] = sqrt_pi * v * v;
  }
  return rule;
}

double hermite_l2_inner(int i, int j, const GaussHermiteRule& rule) {
  if (2 * static_cast<int>(rule.nodes.size()) - 1 < i + j) {
    throw std::invalid_argument("hermite_l2_inner: rule too short for degree");
  }
  double acc = 0.0;
  for (std::size_t k = 0; k < rule.nodes.size(); ++k) {
    const double x = rule.nodes[k];
    // weight carries exp(-x^2); the two functions carry exp(-x^2) jointly,
    // so multiply it back in
    acc += rule.weights[k] * std::exp(x * x) * hermite_fn(i, x) * hermite_fn(j, x);
  }
  return acc;
}

HermiteBoundsReport verify_hermite_bounds(int jmax) {
  if (jmax > 500) {
    throw std::invalid_argument("verify_hermite_bounds: jmax beyond 500");
  }
  HermiteBoundsReport rep;
  rep.gamma_decay = std::numeric_limits<double>::infinity();
  std::vector<double> deriv_sup(jmax + 1, 0.0);
  // sampled |zeta_j| in the oscillatory and decay regions, kept for the
  // envelope re-sweep
  std::vector<std::vector<double>> osc_samples(jmax + 1), far_samples(jmax + 1);

  for (int j = 1; j <= jmax; ++j) {
    const double osc_edge = 2.0 * std::sqrt(static_cast<double>(j));
    const double far_edge = 3.0 * std::sqrt(static_cast<double>(j));
    // several samples per local oscillation wavelength
    const int osc_pts = std::max(256, 4 * j);
    const int far_pts = 128;
    double sup_osc = 0.0, dsup = 0.0;
    osc_samples[j].resize(osc_pts + 1);
    far_samples[j].resize(far_pts + 1);
    for (int k = 0; k <= osc_pts + far_pts; ++k) {
      const double t = (k <= osc_pts)
                           ? osc_edge * k / osc_pts
                           : osc_edge + (far_edge - osc_edge) * (k - osc_pts) / far_pts;
      const Triple tri = hermite_triple(j, t);
      const double v = std::abs(tri.at);
      if (k <= osc_pts) {
        osc_samples[j][k] = v;
        sup_osc = std::max(sup_osc, v);
      } else {
        far_samples[j][k - osc_pts] = v;
      }
      const double d =
          std::sqrt(0.5 * j) * tri.below - std::sqrt(0.5 * (j + 1)) * tri.above;
      dsup = std::max(dsup, std::abs(d));
    }
    rep.c_osc = std::max(rep.c_osc, sup_osc * std::pow(j, 1.0 / 12.0));
    rep.a_sup = std::max(rep.a_sup, sup_osc);
    deriv_sup[j] = dsup;
  }

  // decay rate from the stored beyond-edge samples against the final C
  for (int j = 1; j <= jmax; ++j) {
    const double osc_edge = 2.0 * std::sqrt(static_cast<double>(j));
    const double far_edge = 3.0 * std::sqrt(static_cast<double>(j));
    for (std::size_t k = 1; k < far_samples[j].size(); ++k) {
      const double t = osc_edge + (far_edge - osc_edge) * k / 128;
      const double v = far_samples[j][k];
      if (v > 0.0 && v < rep.c_osc) {
        rep.gamma_decay =
            std::min(rep.gamma_decay, (std::log(rep.c_osc) - std::log(v)) / (t * t));
      }
    }
  }

  // Lipschitz envelope |zeta_j'| <= C sqrt(j) + D
  rep.d_lip = deriv_sup[1];
  for (int j = 2; j <= jmax; ++j) {
    rep.c_lip = std::max(
        rep.c_lip, (deriv_sup[j] - rep.d_lip) / (std::sqrt(static_cast<double>(j)) - 1.0));
  }

  // envelope re-sweep over the stored samples
  bool ok = std::isfinite(rep.c_osc) && std::isfinite(rep.a_sup) &&
            rep.gamma_decay > 0.0 && rep.gamma_decay < 1e30 &&
            std::isfinite(rep.c_lip);
  for (int j = 1; ok && j <= jmax; ++j) {
    const double osc_edge = 2.0 * std::sqrt(static_cast<double>(j));
    const double far_edge = 3.0 * std::sqrt(static_cast<double>(j));
    const double bound_osc = rep.c_osc * std::pow(j, -1.0 / 12.0);
    for (double v : osc_samples[j]) {
      if (v > bound_osc * (1.0 + 1e-9)) {
        ok = false;
        break;
      }
    }
    for (std::size_t k = 1; ok && k < far_samples[j].size(); ++k) {
      const double t = osc_edge + (far_edge - osc_edge) * k / 128;
      if (far_samples[j][k] >
          rep.c_osc * std::exp(-rep.gamma_decay * t * t) * (1.0 + 1e-9)) {
        ok = false;
        break;
      }
    }
    if (deriv_sup[j] >
        (rep.c_lip * std::sqrt(static_cast<double>(j)) + rep.d_lip) * (1.0 + 1e-9)) {
      ok = false;
    }
  }
  rep.pass = ok;
  return rep;
}

double hermite_integral(int j, double t) {
  if (j < 0) throw std::invalid_argument("hermite_integral: requires j >= 0");
  if (t == 0.0) return 0.0;
  return integrate_or_throw([j](double v) { return hermite_fn(j, v); },
                            0.0, t, 1e-12, 1e-10, 8000);
}

std::vector<double> hermite_integrals_upto(int jmax, double t) {
  std::vector<double> out(jmax + 1);
  const std::vector<double> at_t = hermite_fn_all(jmax, t);
  const std::vector<double> at_0 = hermite_fn_all(jmax, 0.0);
  out[0] = kQuarterRootPi * std::sqrt(0.5 * kPi) * std::erf(t / std::sqrt(2.0));
  if (jmax >= 1) {
    out[1] = std::sqrt(2.0) * kQuarterRootPi * (1.0 - std::exp(-0.5 * t * t));
  }
  for (int j = 1; j < jmax; ++j) {
    out[j + 1] = std::sqrt(static_cast<double>(j) / (j + 1)) * out[j - 1] -
                 std::sqrt(2.0 / (j + 1)) * (at_t[j] - at_0[j]);
  }
  return out;
}

ProcessElement process_element(double t, int J, const MLFunction& phi) {
  if (J < 1) throw std::invalid_argument("process_element: requires J >= 1");
  const double scale = 1.0 / std::sqrt(phi.coefficient(1));
  const std::vector<double> integrals = hermite_integrals_upto(J - 1, t);
  ProcessElement out;
  out.time = t;
  out.basis_size = J;
  for (int j = 0; j < J; ++j) {
    out.series.add(MultiIndex::unit(j), integrals[j] * scale);
  }
  return out;
}

ProcessElement noise_element(double t, int J, const MLFunction& phi) {
  if (J < 1) throw std::invalid_argument("noise_element: requires J >= 1");
  const double scale = 1.0 / std::sqrt(phi.coefficient(1));
  const std::vector<double> values = hermite_fn_all(J - 1, t);
  ProcessElement out;
  out.time = t;
  out.basis_size = J;
  for (int j = 0; j < J; ++j) {
    out.series.add(MultiIndex::unit(j), values[j] * scale);
  }
  return out;
}

double diff_quotient_error(double t, double h, int J, const MLFunction& phi,
                           const WeightSystem& w, int p) {
  if (h == 0.0) throw std::invalid_argument("diff_quotient_error: requires h != 0");
  if (p < 1) throw std::invalid_argument("diff_quotient_error: requires p >= 1");
  const GradedSeries xa = process_element(t + h, J, phi).series;
  const GradedSeries xb = process_element(t, J, phi).series;
  const GradedSeries n = noise_element(t, J, phi).series;
  const GradedSeries diff = xa.minus(xb).scaled(1.0 / h).minus(n);
  return hp_norm(diff, p, w);
}

GradedSeries wick_riemann_integral(const std::function<GradedSeries(double)>& f,
                                   int mesh, int J, const MLFunction& phi) {
  if (mesh < 2) throw std::invalid_argument("wick_riemann_integral: mesh >= 2");
  const double dt = 1.0 / mesh;
  std::vector<GradedSeries> terms(mesh);
  for (int i = 0; i < mesh; ++i) {
    const double t = (i + 0.5) * dt;
    terms[i] = f(t).convolve(noise_element(t, J, phi).series).scaled(dt);
  }
  // pairwise reduction: summation order independent of evaluation order
  while (terms.size() > 1) {
    std::vector<GradedSeries> next;
    next.reserve((terms.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
      next.push_back(terms[i].plus(terms[i + 1]));
    }
    if (terms.size() % 2 == 1) next.push_back(terms.back());
    terms = std::move(next);
  }
  return terms[0];
}

} // namespace greynoise
