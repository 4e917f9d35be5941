#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace greynoise {

// Exact arithmetic used by the identity tests and the rational mode of the
// moment engine. Factorials overflow 64-bit integers already at 21!, and the
// combinatorial sums in the moment formula multiply several of them.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline BigInt double_factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = n; k > 1; k -= 2) r *= k;
  return r;
}

inline double to_double(const Rational& q) {
  return q.convert_to<double>();
}

inline double to_double(const BigInt& n) {
  return n.convert_to<double>();
}

} // namespace greynoise
