#include "greynoise/fockspace.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

#include "greynoise/errors.hpp"

namespace greynoise {

double FockGeometry::weight(const MultiIndex& gamma) const {
  double w = 1.0;
  for (std::size_t j = 0; j < gamma.support_size(); ++j) {
    const double c = phi_.coefficient(gamma[j]);
    if (c == 0.0) {
      throw std::domain_error(
          "FockGeometry: monomial direction excluded (zero Taylor coefficient)");
    }
    w *= c;
  }
  return w;
}

Rational FockGeometry::exact_weight(const MultiIndex& gamma) const {
  Rational w = 1;
  for (std::size_t j = 0; j < gamma.support_size(); ++j) {
    const Rational c = phi_.exact_coefficient(gamma[j]);
    if (c == 0) {
      throw std::domain_error(
          "FockGeometry: monomial direction excluded (zero Taylor coefficient)");
    }
    w *= c;
  }
  return w;
}

std::complex<double> kernel_eval(const std::vector<std::complex<double>>& z,
                                 const std::vector<std::complex<double>>& w,
                                 const MLFunction& phi) {
  const std::size_t n = std::max(z.size(), w.size());
  std::complex<double> out = 1.0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::complex<double> zj = j < z.size() ? z[j] : 0.0;
    const std::complex<double> wj = j < w.size() ? w[j] : 0.0;
    if (zj == 0.0 || wj == 0.0) continue;   // phi(0) = 1
    out *= phi.eval(zj * std::conj(wj));
  }
  return out;
}

DomainCheckReport domain_check(const std::vector<std::complex<double>>& prefix,
                               const MLFunction& phi) {
  DomainCheckReport rep;
  double sum = 0.0;
  std::vector<double> terms;
  for (const auto& zj : prefix) {
    const double term = std::abs(1.0 - phi.eval_real(std::norm(zj)));
    terms.push_back(term);
    sum += term;
    rep.partial_sums.push_back(sum);
  }
  if (terms.empty()) {
    rep.verdict = DomainVerdict::InDomain;
    return rep;
  }
  // trailing zeros: a finite-support sequence, tail exactly 0
  std::size_t last = terms.size();
  while (last > 0 && terms[last - 1] == 0.0) --last;
  if (last == 0 || last < terms.size()) {
    rep.verdict = DomainVerdict::InDomain;
    rep.tail_estimate = 0.0;
    return rep;
  }
  // geometric decay first, then a power-law exponent fit on the trailing
  // window (the l2 prefixes decay like j^-2, far from geometric)
  const std::size_t window = std::min<std::size_t>(8, terms.size() - 1);
  double worst_ratio = 0.0;
  bool ratio_valid = true;
  for (std::size_t i = terms.size() - window; i < terms.size(); ++i) {
    if (terms[i - 1] == 0.0) {
      ratio_valid = false;
      break;
    }
    worst_ratio = std::max(worst_ratio, terms[i] / terms[i - 1]);
  }
  if (!ratio_valid) return rep;   // inconclusive
  if (worst_ratio < 0.9) {
    rep.verdict = DomainVerdict::InDomain;
    rep.tail_estimate = terms.back() * worst_ratio / (1.0 - worst_ratio);
    return rep;
  }
  // least-squares slope of log t_j against log j over the window
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = terms.size() - window; i < terms.size(); ++i) {
    const double x = std::log(static_cast<double>(i + 1));
    const double y = std::log(terms[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(window);
  const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  const double p = -slope;
  if (p > 1.1) {
    rep.verdict = DomainVerdict::InDomain;
    rep.tail_estimate =
        terms.back() * static_cast<double>(terms.size()) / (p - 1.0);
  } else if (p < 0.95) {
    rep.verdict = DomainVerdict::Diverges;
    rep.tail_estimate = std::numeric_limits<double>::infinity();
  }
  return rep;
}

std::complex<double> fock_inner(const GradedSeries& f, const GradedSeries& g,
                                const FockGeometry& geom) {
  std::complex<double> acc = 0.0;
  for (const auto& [gamma, fc] : f.coefficients()) {
    const std::complex<double> gc = g.at(gamma);
    if (gc == std::complex<double>(0.0)) continue;
    acc += fc * std::conj(gc) / geom.weight(gamma);
  }
  return acc;
}

double fock_norm(const GradedSeries& f, const FockGeometry& geom) {
  return std::sqrt(std::max(0.0, fock_inner(f, f, geom).real()));
}

GradedSeries phi_transform(const GradedSeries& chaos_coeffs, const FockGeometry& geom) {
  GradedSeries out;
  for (const auto& [gamma, c] : chaos_coeffs.coefficients()) {
    out.set(gamma, c * std::sqrt(geom.weight(gamma)));
  }
  return out;
}

GradedSeries wick_product(const GradedSeries& f, const GradedSeries& g) {
  return f.convolve(g);
}

std::vector<std::complex<double>> gl_derivative(
    const std::vector<std::complex<double>>& coeffs, const MLFunction& phi) {
  std::vector<std::complex<double>> out;
  if (coeffs.size() <= 1) return out;
  out.resize(coeffs.size() - 1);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    const double ck = phi.coefficient(static_cast<int>(k));
    if (ck == 0.0) {
      throw std::domain_error("gl_derivative: undefined coefficient ratio");
    }
    out[k - 1] = coeffs[k] * (phi.coefficient(static_cast<int>(k) - 1) / ck);
  }
  return out;
}

PairingCheck pairing_check(int k, int l, const MLFunction& phi) {
  if (k < 0 || l < 0 || k > phi.order() || l > phi.order()) {
    throw std::invalid_argument("pairing_check: exponent beyond truncation");
  }
  PairingCheck out{};
  const double ck = phi.coefficient(k);
  if (ck == 0.0 || phi.coefficient(k + 1) == 0.0) {
    throw std::domain_error("pairing_check: zero coefficient in range");
  }
  if (l == k - 1) {
    // <d z^k, z^{k-1}> = (c_{k-1}/c_k) / c_{k-1} = 1/c_k, and
    // <z^k, z^k> / c-normalization gives the same on the multiplier side
    out.derivative_side = (phi.coefficient(k - 1) / ck) / phi.coefficient(k - 1);
    out.multiplier_side = 1.0 / ck;
  } else {
    out.derivative_side = 0.0;
    out.multiplier_side = 0.0;
  }
  const double ckm1 = (k >= 1) ? phi.coefficient(k - 1) : 0.0;   // c_{-1} = 0
  const double ckp1 = phi.coefficient(k + 1);
  out.commutator_eigenvalue = (ck * ck - ckm1 * ckp1) / (ck * ckp1);
  return out;
}

Rational commutator_eigenvalue_exact(int k, const MLFunction& phi) {
  const Rational ck = phi.exact_coefficient(k);
  const Rational ckm1 = (k >= 1) ? phi.exact_coefficient(k - 1) : Rational(0);
  const Rational ckp1 = phi.exact_coefficient(k + 1);
  if (ck == 0 || ckp1 == 0) {
    throw std::domain_error("commutator_eigenvalue_exact: zero coefficient");
  }
  return (ck * ck - ckm1 * ckp1) / (ck * ckp1);
}

// --------------------------------------------------------------------------
// GradedSeries JSON round-trip

std::string graded_series_to_json(const GradedSeries& s) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [gamma, c] : s.coefficients()) {
    nlohmann::json item;
    item["index"] = gamma.entries();
    item["re"] = c.real();
    item["im"] = c.imag();
    arr.push_back(std::move(item));
  }
  return arr.dump();
}

GradedSeries graded_series_from_json(const std::string& text) {
  const nlohmann::json arr = nlohmann::json::parse(text);
  if (!arr.is_array()) {
    throw std::invalid_argument("graded series JSON: expected an array");
  }
  GradedSeries out;
  for (const auto& item : arr) {
    const std::vector<int> idx = item.at("index").get<std::vector<int>>();
    const double re = item.at("re").get<double>();
    const double im = item.at("im").get<double>();
    out.add(MultiIndex(idx), {re, im});
  }
  return out;
}

} // namespace greynoise
