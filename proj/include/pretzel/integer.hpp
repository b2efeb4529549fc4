#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pretzel {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer abs(const Integer& v) { return v < 0 ? Integer(-v) : v; }

inline Integer gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

inline bool is_odd(const Integer& v) { return boost::multiprecision::bit_test(abs(v), 0); }
inline bool is_even(const Integer& v) { return !is_odd(v); }

/// Floor division with a positive divisor.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_string(const Integer& v) { return v.str(); }

/// Renders "n" for integral values and "n/d" otherwise.
inline std::string to_string(const Rational& v) {
  const Integer num = boost::multiprecision::numerator(v);
  const Integer den = boost::multiprecision::denominator(v);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

Rational parse_rational(const std::string& text);

}  // namespace pretzel
