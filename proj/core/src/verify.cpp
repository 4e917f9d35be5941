#include "greynoise/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdio>
#include <random>

#include "greynoise/fockspace.hpp"
#include "greynoise/kondratiev.hpp"
#include "greynoise/marginals.hpp"
#include "greynoise/moments.hpp"
#include "greynoise/orthopoly.hpp"
#include "greynoise/process.hpp"
#include "greynoise/spectral.hpp"

namespace greynoise::verify {

namespace {

std::string fmt(const char* pattern, ...) {
  char buf[512];
  va_list args;
  va_start(args, pattern);
  vsnprintf(buf, sizeof(buf), pattern, args);
  va_end(args);
  return buf;
}

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double uniform() { return static_cast<double>(gen() >> 11) * 0x1p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int integer(int lo, int hi) {   // inclusive
    return lo + static_cast<int>(gen() % static_cast<std::uint64_t>(hi - lo + 1));
  }
};

GramMatrix random_psd_gram(int d, Rng& rng) {
  Eigen::MatrixXd a(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) a(i, j) = rng.uniform(-1.0, 1.0);
  }
  Eigen::MatrixXd g = a.transpose() * a / static_cast<double>(d);
  return GramMatrix(std::move(g));
}

bool close_rel(double a, double b, double rel, double abs_floor = 1e-14) {
  const double diff = std::abs(a - b);
  return diff <= rel * std::max(std::abs(a), std::abs(b)) || diff <= abs_floor;
}

// ------------------------------------------------------------------ 1
CheckResult gaussian_moment_closure(std::uint64_t seed) {
  CheckResult out{"gaussian_moment_closure", false, ""};
  const MLFunction phi = MLFunction::exponential();
  const MomentWeights m = moment_weights(phi);
  Rng rng(seed ^ 0x1a2b3c4dULL);

  double worst = 0.0;
  long compared = 0;
  const auto gammas = enumerate_up_to(4, 8);
  for (int trial = 0; trial < 100; ++trial) {
    const GramMatrix g = random_psd_gram(4, rng);
    for (const MultiIndex& gamma : gammas) {
      const double lhs = moment(gamma, g, m).value;
      const double rhs = isserlis_oracle(gamma, g);
      ++compared;
      const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-14});
      worst = std::max(worst, std::abs(lhs - rhs) / scale);
      if (!close_rel(lhs, rhs, 1e-12)) {
        out.detail = fmt("moment vs Isserlis mismatch %.3e at trial %d",
                         std::abs(lhs - rhs), trial);
        return out;
      }
    }
  }

  // radial moments (2n-1)!! |s|^{2n}, exact rational mode
  for (int n = 0; n <= 6; ++n) {
    for (const Rational& s2 : {Rational(1), Rational(3, 2)}) {
      Rational expected = Rational(double_factorial(2 * n - 1 > 0 ? 2 * n - 1 : 1));
      if (n == 0) expected = 1;
      Rational p = 1;
      for (int k = 0; k < n; ++k) p *= s2;
      expected *= p;
      if (radial_moment_exact(n, s2, m) != expected) {
        out.detail = fmt("radial moment mismatch at n=%d", n);
        return out;
      }
    }
  }
  out.pass = true;
  out.detail = fmt("%ld moments vs Isserlis, worst rel dev %.2e; radial exact",
                   compared, worst);
  return out;
}

// ------------------------------------------------------------------ 2
CheckResult worked_example_rational() {
  CheckResult out{"worked_example_rational", false, ""};
  const MultiIndex gamma({2, 2});
  const GramMatrix id2 = GramMatrix::identity(2);
  const Rational multiplier = moment_multiplier_exact(gamma, id2);
  // (4! m_2 / 6) * 2 == 8 m_2 for every phi
  if (multiplier != Rational(factorial(4)) / 6 * 2) {
    out.detail = "phi-free multiplier differs from the closed display";
    return out;
  }
  const std::vector<MLFunction> builtins = {
      MLFunction::exponential(), MLFunction::mittag_leffler(0.5),
      MLFunction::mittag_leffler(0.8), MLFunction::mittag_leffler(1.0)};
  for (const MLFunction& phi : builtins) {
    const MomentWeights m = moment_weights(phi);
    const double lhs = moment(gamma, id2, m).value;
    if (!close_rel(lhs, 8.0 * m[2], 1e-14)) {
      out.detail = "moment != 8 m_2 for a built-in phi";
      return out;
    }
  }
  // exact rational route for the exponential
  const MomentWeights mexp = moment_weights(MLFunction::exponential());
  if (moment_exact(gamma, id2, mexp) != Rational(8) * mexp.exact_at(2)) {
    out.detail = "rational moment != 8 m_2";
    return out;
  }
  out.pass = true;
  out.detail = "multiplier == 8 exactly; moment == 8 m_2 for all built-ins";
  return out;
}

// ------------------------------------------------------------------ 3
CheckResult moment_vs_quadrature() {
  CheckResult out{"moment_vs_quadrature", false, ""};
  struct Case {
    const char* label;
    MLFunction phi;
  };
  const std::vector<Case> cases = {{"exp", MLFunction::exponential()},
                                   {"ml(0.5)", MLFunction::mittag_leffler(0.5)},
                                   {"ml(0.8)", MLFunction::mittag_leffler(0.8)}};
  double worst = 0.0;
  for (const Case& c : cases) {
    const MomentWeights m = moment_weights(c.phi);
    for (int n = 0; n <= 4; ++n) {
      const double quad = moment_quadrature_1d(c.phi, n);
      const double closed = radial_moment(n, 1.0, m);
      const double rel = std::abs(quad - closed) / std::abs(closed);
      worst = std::max(worst, rel);
      if (rel > 1e-3) {
        out.detail = fmt("%s n=%d: quadrature %.6e vs closed %.6e (rel %.2e)",
                         c.label, n, quad, closed, rel);
        return out;
      }
    }
  }
  out.pass = true;
  out.detail = fmt("3 phis, n <= 4, worst rel dev %.2e", worst);
  return out;
}

// ------------------------------------------------------------------ 4
CheckResult diophantine_identity() {
  CheckResult out{"diophantine_identity", false, ""};
  long checked = 0;
  for (int degree = 0; degree <= 12; ++degree) {
    for (const MultiIndex& gamma : enumerate_graded(5, degree)) {
      const auto sols = solve_diophantine(gamma);
      if (degree % 2 == 1) {
        if (!sols.empty()) {
          out.detail = "odd degree produced solutions";
          return out;
        }
        continue;
      }
      for (const PairAssignment& beta : sols) {
        if (2 * beta.total() != degree) {
          out.detail = "solution with wrong total";
          return out;
        }
      }
      BigInt expected = factorial(degree);
      for (int e : gamma.entries()) expected /= factorial(e);
      if (moment_denominator(gamma) != expected) {
        out.detail = fmt("denominator identity failed at degree %d", degree);
        return out;
      }
      ++checked;
    }
  }
  out.pass = true;
  out.detail = fmt("%ld even multi-indices, Den == (2n)!/prod gamma_j! exactly",
                   checked);
  return out;
}

// ------------------------------------------------------------------ 5
// probabilists' Hermite coefficients (exact in double at these degrees)
std::vector<std::vector<double>> hermite_he_table(int nmax) {
  std::vector<std::vector<double>> he(nmax + 1);
  he[0] = {1.0};
  if (nmax >= 1) he[1] = {0.0, 1.0};
  for (int n = 1; n < nmax; ++n) {
    std::vector<double> next(n + 2, 0.0);
    for (int k = 0; k <= n; ++k) next[k + 1] += he[n][k];
    for (int k = 0; k < n; ++k) next[k] -= n * he[n - 1][k];
    he[n + 1] = std::move(next);
  }
  return he;
}

CheckResult chaos_orthonormality() {
  CheckResult out{"chaos_orthonormality", false, ""};
  const auto he = hermite_he_table(6);
  double worst_gram = 0.0, worst_hermite = 0.0, worst_ct = 0.0, worst_b = 0.0,
         worst_res = 0.0;
  for (int which = 0; which < 2; ++which) {
    const MLFunction phi = which == 0 ? MLFunction::exponential()
                                      : MLFunction::mittag_leffler(0.5);
    const MomentWeights m = moment_weights(phi);
    for (int d = 1; d <= 3; ++d) {
      const int N = 5;
      const GramMatrix g = GramMatrix::identity(d);
      const ChaosBasis basis = orthonormal_basis(d, N, g, m);
      const Eigen::MatrixXd gram = recompute_basis_gram(basis);
      const double dev = (gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols()))
                             .cwiseAbs()
                             .maxCoeff();
      worst_gram = std::max(worst_gram, dev);
      if (dev > 1e-8) {
        out.detail = fmt("recomputed Gram deviates %.2e (d=%d)", dev, d);
        return out;
      }

      if (which == 0) {
        // Gaussian basis == products of normalized Hermite polynomials
        for (std::size_t i = 0; i < basis.indices.size(); ++i) {
          const MultiIndex& gamma = basis.indices[i];
          double norm = 1.0;
          for (std::size_t v = 0; v < gamma.support_size(); ++v) {
            norm *= to_double(factorial(gamma[v]));
          }
          norm = std::sqrt(norm);
          for (std::size_t jj = 0; jj < basis.indices.size(); ++jj) {
            const MultiIndex& delta = basis.indices[jj];
            double expected = 1.0;
            for (int v = 0; v < d; ++v) {
              const int gv = gamma[v], dv = delta[v];
              expected *= (dv < static_cast<int>(he[gv].size())) ? he[gv][dv] : 0.0;
            }
            expected /= norm;
            worst_hermite =
                std::max(worst_hermite, std::abs(basis.coeffs(i, jj) - expected));
          }
        }
        if (worst_hermite > 1e-8) {
          out.detail = fmt("Gaussian basis deviates from product Hermite by %.2e",
                           worst_hermite);
          return out;
        }
      }

      // three-term blocks over every level the basis supports
      for (int level = 0; level + 1 <= N; ++level) {
        for (int j = 0; j < d; ++j) {
          const RecurrenceBlocks blocks = recurrence_blocks(basis, j, level);
          worst_res = std::max(worst_res, blocks.residual);
          if (blocks.b.size() > 0) {
            worst_b = std::max(worst_b, blocks.b.cwiseAbs().maxCoeff());
          }
          if (level > 0) {
            const RecurrenceBlocks prev = recurrence_blocks(basis, j, level - 1);
            const double ct =
                (blocks.c - prev.a.transpose()).cwiseAbs().maxCoeff();
            worst_ct = std::max(worst_ct, ct);
          }
        }
      }
      if (worst_b > 1e-10) {
        out.detail = fmt("B-block magnitude %.2e", worst_b);
        return out;
      }
      if (worst_ct > 1e-8) {
        out.detail = fmt("C != A^T by %.2e", worst_ct);
        return out;
      }
    }
  }
  out.pass = true;
  out.detail = fmt("gram dev %.1e, hermite dev %.1e, residual %.1e, C-A^T %.1e, "
                   "B %.1e",
                   worst_gram, worst_hermite, worst_res, worst_ct, worst_b);
  return out;
}

// ------------------------------------------------------------------ 6
CheckResult pphi_exponential_crosscheck() {
  CheckResult out{"pphi_exponential_crosscheck", false, ""};
  // Gaussian: reproduce the Hermite generating coefficients exactly
  const MomentWeights m = moment_weights(MLFunction::exponential());
  PphiExpansion e = pphi_exponential_coeffs(m, 10);
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; 2 * k <= n; ++k) {
      Rational expected = Rational(1) / Rational(factorial(k) * factorial(n - 2 * k));
      for (int i = 0; i < k; ++i) expected /= -2;
      if (e.division[n][k] != expected) {
        out.detail = fmt("Gaussian coefficient (n=%d,k=%d) off", n, k);
        return out;
      }
    }
  }
  // a non-Gaussian rational weight sequence exercises the generic algebra
  std::vector<Rational> taylor(21);
  Rational f = 1;
  for (int k = 0; k <= 20; ++k) {
    if (k > 0) f /= k;
    taylor[k] = f * f;   // 1/(k!)^2: entire, positive coefficients
  }
  const MomentWeights m2 = moment_weights(MLFunction::custom_exact(taylor));
  pphi_exponential_coeffs(m2, 10);   // throws on route disagreement
  out.pass = true;
  out.detail = "division == combinatorial exactly (n <= 10); Gaussian == Hermite";
  return out;
}

// ------------------------------------------------------------------ 7
CheckResult fock_calculus() {
  CheckResult out{"fock_calculus", false, ""};
  const MLFunction exp_phi = MLFunction::exponential();
  std::vector<Rational> bessel_taylor(16);
  Rational f = 1;
  for (int k = 0; k <= 15; ++k) {
    if (k > 0) f /= k;
    bessel_taylor[k] = f * f;
  }
  const MLFunction bessel_phi = MLFunction::custom_exact(bessel_taylor);

  for (const MLFunction* phi : {&exp_phi, &bessel_phi}) {
    const auto& c = phi->exact_taylor();
    // adjoint pairing exact for k, l <= 12
    for (int k = 0; k <= 12; ++k) {
      for (int l = 0; l <= 12; ++l) {
        Rational derivative_side = 0, multiplier_side = 0;
        if (l == k - 1) {
          derivative_side = (c[k - 1] / c[k]) / c[k - 1];
          multiplier_side = Rational(1) / c[k];
        }
        if (derivative_side != multiplier_side) {
          out.detail = fmt("adjoint pairing mismatch at k=%d l=%d", k, l);
          return out;
        }
      }
    }
    // commutator eigenvalue: formula vs direct operator application
    for (int k = 0; k <= 12; ++k) {
      std::vector<Rational> taylor(c.begin(), c.end());
      RationalSeries zk = RationalSeries::monomial(MultiIndex({k}));
      // M_z then derivative
      RationalSeries mz;
      for (const auto& [g, v] : zk.coefficients()) mz.add(g.incremented(0), v);
      RationalSeries dmz = gl_derivative_coord(mz, 0, taylor);
      // derivative then M_z
      RationalSeries dz = gl_derivative_coord(zk, 0, taylor);
      RationalSeries mdz;
      for (const auto& [g, v] : dz.coefficients()) mdz.add(g.incremented(0), v);
      const RationalSeries comm = dmz.minus(mdz);
      const Rational direct = comm.at(MultiIndex({k}));
      if (comm.support_size() != 1 && !(comm.empty() && direct == 0)) {
        out.detail = fmt("commutator not diagonal at k=%d", k);
        return out;
      }
      if (direct != commutator_eigenvalue_exact(k, *phi)) {
        out.detail = fmt("commutator formula mismatch at k=%d", k);
        return out;
      }
      if (phi == &exp_phi && direct != 1) {
        out.detail = fmt("Gaussian commutator != 1 at k=%d", k);
        return out;
      }
    }
    // kernel eigen-relation at truncation 12: d_z K = wbar K, coefficientwise
    // (variable 0 is z, variable 1 carries the conjugate factor)
    std::vector<Rational> taylor(c.begin(), c.end());
    RationalSeries kernel;
    for (int k = 0; k <= 12; ++k) {
      kernel.add(MultiIndex({k, k}), c[k]);
    }
    const RationalSeries lhs = gl_derivative_coord(kernel, 0, taylor);
    RationalSeries rhs;
    for (const auto& [g, v] : kernel.coefficients()) {
      if (g[0] >= 12) continue;   // truncation boundary drops the top term
      rhs.add(g.incremented(1), v);
    }
    RationalSeries lhs_trimmed;
    for (const auto& [g, v] : lhs.coefficients()) {
      if (g[0] < 12) lhs_trimmed.add(g, v);
    }
    if (!(lhs_trimmed == rhs)) {
      out.detail = "kernel eigen-relation failed coefficientwise";
      return out;
    }
  }
  out.pass = true;
  out.detail = "pairing, commutator, Gaussian == 1, kernel relation: exact";
  return out;
}

// ------------------------------------------------------------------ 8
GradedSeries random_series(Rng& rng, int max_terms, int max_degree, int max_vars) {
  GradedSeries s;
  const int terms = rng.integer(1, max_terms);
  for (int t = 0; t < terms; ++t) {
    const int degree = rng.integer(0, max_degree);
    std::vector<int> entries(max_vars, 0);
    for (int u = 0; u < degree; ++u) ++entries[rng.integer(0, max_vars - 1)];
    s.add(MultiIndex(entries),
          std::complex<double>(rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)));
  }
  return s;
}

CheckResult vage_inequality(std::uint64_t seed) {
  CheckResult out{"vage_inequality", false, ""};
  const WeightSystem w = WeightSystem::geometric(2.0, 2.0, 2);
  const VageConstants c = vage_constant(4, 1, w);
  if (!(c.tight <= c.product * (1.0 + 1e-12))) {
    out.detail = "tight constant exceeds the product form";
    return out;
  }
  Rng rng(seed ^ 0x8e8e77aaULL);
  double worst_ratio = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const GradedSeries f = random_series(rng, 25, 8, 8);
    const GradedSeries g = random_series(rng, 25, 8, 8);
    const VageReport rep = verify_vage(f, g, 4, 1, w);
    worst_ratio = std::max(worst_ratio, rep.ratio);
    if (!rep.pass) {
      out.detail = fmt("inequality violated at trial %d (ratio %.6f)", trial,
                       rep.ratio);
      return out;
    }
  }
  out.pass = true;
  out.detail = fmt("1000 random pairs pass; worst lhs/rhs %.4f; tight %.6f <= "
                   "product %.6f",
                   worst_ratio, c.tight, c.product);
  return out;
}

// ------------------------------------------------------------------ 9
struct HermiteFitCache {
  HermiteBoundsReport bounds;
  bool ready = false;
};

CheckResult process_isometry(HermiteFitCache& cache) {
  CheckResult out{"process_isometry", false, ""};
  // covariance table at J = 400 against t ^ s
  const int J = 400;
  double worst = 0.0;
  std::vector<std::vector<double>> integrals;
  for (int i = 0; i < 5; ++i) {
    integrals.push_back(hermite_integrals_upto(J - 1, 3.0 * i / 4.0));
  }
  for (int i = 0; i < 5; ++i) {
    for (int k = 0; k < 5; ++k) {
      double cov = 0.0;
      for (int j = 0; j < J; ++j) cov += integrals[i][j] * integrals[k][j];
      const double target = std::min(3.0 * i / 4.0, 3.0 * k / 4.0);
      worst = std::max(worst, std::abs(cov - target));
    }
  }
  const bool cov_ok = worst <= 1e-2;

  // derivative rate: slope of log(err) vs log(h) and the M |h| envelope
  const MLFunction phi = MLFunction::exponential();
  const WeightSystem w = WeightSystem::geometric(2.0, 2.0, 2);
  const int Jd = 100, p = 1;
  const double t = 1.0;
  std::vector<double> hs = {1e-1, 1e-2, 1e-3, 1e-4};
  std::vector<double> errs;
  for (double h : hs) errs.push_back(diff_quotient_error(t, h, Jd, phi, w, p));
  // least-squares slope in log-log
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    const double x = std::log(hs[i]), y = std::log(errs[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(hs.size());
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const bool slope_ok = slope >= 0.9;

  if (!cache.ready) {
    cache.bounds = verify_hermite_bounds(500);
    cache.ready = true;
  }
  // envelope constant from the fitted Lipschitz pair
  double m_sq = 0.0;
  for (int j = 0; j < Jd; ++j) {
    const double lip = cache.bounds.c_lip * std::sqrt(static_cast<double>(j)) +
                       cache.bounds.d_lip;
    m_sq += lip * lip * std::pow(w.a(j + 1), -p);
  }
  m_sq *= std::pow(w.b(1), -p) / phi.coefficient(1);
  const double m_const = std::sqrt(m_sq);
  bool envelope_ok = true;
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (errs[i] > m_const * hs[i]) envelope_ok = false;
  }

  out.pass = cov_ok && slope_ok && envelope_ok;
  std::string covnote;
  if (!cov_ok) {
    // locate the truncation at which the tolerance is actually reached
    int j_needed = J;
    for (int jtry = 800; jtry <= 6400; jtry *= 2) {
      const auto a = hermite_integrals_upto(jtry - 1, 3.0);
      double cov = 0.0;
      for (int j = 0; j < jtry; ++j) cov += a[j] * a[j];
      if (std::abs(cov - 3.0) <= 1e-2) {
        j_needed = jtry;
        break;
      }
      j_needed = 2 * jtry;
    }
    covnote = fmt(" [isometry deficit decays ~ J^{-1/2}; 1e-2 first reached "
                  "near J=%d, not J=400]",
                  j_needed);
  }
  out.detail = fmt("max |cov - min(t,s)| = %.4f at J=400 (tol 1e-2: %s); "
                   "slope %.3f (>= 0.9: %s); err <= M|h| with M=%.3f: %s%s",
                   worst, cov_ok ? "ok" : "VIOLATED", slope,
                   slope_ok ? "ok" : "VIOLATED", m_const,
                   envelope_ok ? "ok" : "VIOLATED", covnote.c_str());
  return out;
}

// ------------------------------------------------------------------ 10
CheckResult hermite_bounds(HermiteFitCache& cache) {
  CheckResult out{"hermite_bounds", false, ""};
  if (!cache.ready) {
    cache.bounds = verify_hermite_bounds(500);
    cache.ready = true;
  }
  const HermiteBoundsReport& b = cache.bounds;
  out.pass = b.pass;
  out.detail = fmt("C_osc=%.4f, sup=%.4f, gamma=%.4f, Lip=(%.3f sqrt(j) + %.3f); "
                   "envelopes hold for j <= 500",
                   b.c_osc, b.a_sup, b.gamma_decay, b.c_lip, b.d_lip);
  return out;
}

// ------------------------------------------------------------------ 11
CheckResult spectral_checks(std::uint64_t seed) {
  CheckResult out{"spectral_checks", false, ""};
  const SpectralMeasure leb = SpectralMeasure::lebesgue();
  const double two_pi = 2.0 * 3.14159265358979323846;
  const std::vector<std::pair<double, double>> pts = {
      {0.5, 0.5}, {1.0, 1.0}, {1.0, 2.0}, {2.0, 1.5}, {2.5, 3.0}, {3.0, 3.0}};
  double worst_leb = 0.0;
  for (const auto& [t, s] : pts) {
    const double ratio = spectral_covariance(t, s, leb).real() / std::min(t, s);
    worst_leb = std::max(worst_leb, std::abs(ratio - two_pi));
  }
  if (worst_leb > 1e-3) {
    out.detail = fmt("Lebesgue ratio deviates from 2 pi by %.2e", worst_leb);
    return out;
  }

  double worst_spread = 0.0;
  for (double hurst : {0.3, 0.5, 0.75}) {
    const FbmRatioReport rep =
        fbm_covariance_check(hurst, {0.5, 1.0, 1.5, 2.0});
    worst_spread = std::max(worst_spread, rep.relative_spread);
    if (!rep.pass) {
      out.detail = fmt("fBm ratio spread %.2e at H=%.2f", rep.relative_spread, hurst);
      return out;
    }
  }

  Rng rng(seed ^ 0x5ca1ab1eULL);
  double worst_res = 0.0;
  const std::vector<SpectralMeasure> measures = {
      leb, SpectralMeasure::fbm(0.3), SpectralMeasure::fbm(0.75),
      SpectralMeasure::atomic({{0.7, 2.0}, {-0.7, 2.0}, {1.9, 0.5}, {-1.9, 0.5}})};
  for (const SpectralMeasure& mu : measures) {
    for (int trial = 0; trial < 3; ++trial) {
      const double t = rng.uniform(0.3, 3.0), s = rng.uniform(0.3, 3.0);
      const std::complex<double> k = spectral_covariance(t, s, mu);
      const std::complex<double> rec = r_transform(t, mu) +
                                       std::conj(r_transform(s, mu)) -
                                       r_transform(t - s, mu);
      worst_res = std::max(worst_res, std::abs(k - rec));
    }
  }
  if (worst_res > 1e-8) {
    out.detail = fmt("r-decomposition residual %.2e", worst_res);
    return out;
  }
  out.pass = true;
  out.detail = fmt("Lebesgue 2pi dev %.1e; fBm spread %.1e; r-residual %.1e",
                   worst_leb, worst_spread, worst_res);
  return out;
}

} // namespace

Report run_all(std::uint64_t seed) {
  Report report;
  HermiteFitCache cache;
  report.checks.push_back(gaussian_moment_closure(seed));
  report.checks.push_back(worked_example_rational());
  report.checks.push_back(moment_vs_quadrature());
  report.checks.push_back(diophantine_identity());
  report.checks.push_back(chaos_orthonormality());
  report.checks.push_back(pphi_exponential_crosscheck());
  report.checks.push_back(fock_calculus());
  report.checks.push_back(vage_inequality(seed));
  report.checks.push_back(process_isometry(cache));
  report.checks.push_back(hermite_bounds(cache));
  report.checks.push_back(spectral_checks(seed));
  return report;
}

Report run_with_determinism(std::uint64_t seed) {
  Report first = run_all(seed);
  const Report second = run_all(seed);
  CheckResult det{"determinism", false, ""};
  det.pass = format_report(first, seed) == format_report(second, seed);
  det.detail = det.pass ? "two seeded runs render byte-identical reports"
                        : "reports differ between identically seeded runs";
  first.checks.push_back(det);
  return first;
}

std::string format_report(const Report& report, std::uint64_t seed) {
  std::string out = fmt("acceptance suite (seed %llu)\n",
                        static_cast<unsigned long long>(seed));
  for (std::size_t i = 0; i < report.checks.size(); ++i) {
    const CheckResult& c = report.checks[i];
    out += fmt("%2zu. [%s] %s: %s\n", i + 1, c.pass ? "PASS" : "FAIL",
               c.name.c_str(), c.detail.c_str());
  }
  out += fmt("result: %s\n", report.all_pass() ? "ALL PASS" : "FAILURES PRESENT");
  return out;
}

} // namespace greynoise::verify
