#pragma once

#include <complex>
#include <map>
#include <string>

#include "greynoise/multiindex.hpp"

namespace greynoise {

// Finitely supported map multi-index -> scalar; the universal coefficient
// container (Fock elements, chaos expansions, H_p elements, polynomial
// expansions of quadratic forms). Zero coefficients are pruned on
// insertion. Scalar is complex<double> in the floating path and Rational
// in the exact path.
template <class T>
class Series {
public:
  using Map = std::map<MultiIndex, T>;

  Series() = default;

  static Series unit() {
    Series s;
    s.coeffs_[MultiIndex()] = T(1);
    return s;
  }

  static Series monomial(const MultiIndex& gamma, T value = T(1)) {
    Series s;
    if (value != T(0)) s.coeffs_[gamma] = value;
    return s;
  }

  const Map& coefficients() const { return coeffs_; }
  bool empty() const { return coeffs_.empty(); }
  std::size_t support_size() const { return coeffs_.size(); }

  T at(const MultiIndex& gamma) const {
    auto it = coeffs_.find(gamma);
    return it == coeffs_.end() ? T(0) : it->second;
  }

  void set(const MultiIndex& gamma, T value) {
    if (value == T(0)) {
      coeffs_.erase(gamma);
    } else {
      coeffs_[gamma] = value;
    }
  }

  void add(const MultiIndex& gamma, T value) {
    auto [it, inserted] = coeffs_.try_emplace(gamma, value);
    if (!inserted) {
      it->second += value;
      if (it->second == T(0)) coeffs_.erase(it);
    } else if (value == T(0)) {
      coeffs_.erase(it);
    }
  }

  int degree() const {
    int d = 0;
    for (const auto& [g, c] : coeffs_) d = std::max(d, g.degree());
    return d;
  }

  Series plus(const Series& other) const {
    Series out = *this;
    for (const auto& [g, c] : other.coeffs_) out.add(g, c);
    return out;
  }

  Series minus(const Series& other) const {
    Series out = *this;
    for (const auto& [g, c] : other.coeffs_) out.add(g, -c);
    return out;
  }

  Series scaled(T factor) const {
    Series out;
    if (factor == T(0)) return out;
    for (const auto& [g, c] : coeffs_) out.coeffs_[g] = c * factor;
    return out;
  }

  // coefficient convolution (f*g)_gamma = sum_{a+b=gamma} f_a g_b; this is
  // simultaneously the Wick product on chaos expansions and the strong
  // algebra convolution
  Series convolve(const Series& other) const {
    Series out;
    for (const auto& [a, fa] : coeffs_) {
      for (const auto& [b, gb] : other.coeffs_) {
        out.add(a.plus(b), fa * gb);
      }
    }
    return out;
  }

  Series pow(int n) const {
    Series out = unit();
    for (int k = 0; k < n; ++k) out = out.convolve(*this);
    return out;
  }

  bool operator==(const Series& o) const { return coeffs_ == o.coeffs_; }

private:
  Map coeffs_;
};

using GradedSeries = Series<std::complex<double>>;
using RationalSeries = Series<Rational>;

// JSON round-trip for GradedSeries: [{"index":[...],"re":..,"im":..}, ...]
std::string graded_series_to_json(const GradedSeries& s);
GradedSeries graded_series_from_json(const std::string& text);

} // namespace greynoise
