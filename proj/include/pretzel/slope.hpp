#pragma once

#include <compare>
#include <string>

#include "pretzel/integer.hpp"

namespace pretzel {

/// A surgery slope a/b in meridian/longitude coordinates.
///
/// Always stored reduced with b >= 0; the meridian is 1/0 and integral
/// slopes have b == 1. Immutable once constructed.
class Slope {
 public:
  /// Reduces (a, b), moving the sign into the numerator. Throws
  /// std::invalid_argument for (0, 0).
  Slope(Integer a, Integer b);
  explicit Slope(long long n) : Slope(Integer(n), Integer(1)) {}

  static Slope meridian() { return Slope(1, 0); }
  static Slope longitude() { return Slope(0, 1); }

  const Integer& num() const { return a_; }
  const Integer& den() const { return b_; }

  bool is_meridian() const { return b_ == 0; }
  bool is_integral() const { return b_ == 1; }

  /// Value as a rational; throws std::domain_error for the meridian.
  Rational value() const;

  std::string str() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  /// Orders by rational value with the meridian last.
  friend std::strong_ordering operator<=>(const Slope& s, const Slope& t);

 private:
  Integer a_;
  Integer b_;
};

Slope make_slope(const Integer& a, const Integer& b);

/// Parses "a/b" or a bare integer "n".
Slope parse_slope(const std::string& text);

/// Minimal geometric intersection number |ad - bc|.
Integer distance(const Slope& s, const Slope& t);

bool is_even_integral(const Slope& s);
bool is_odd_integral(const Slope& s);
bool is_half_integral(const Slope& s);
/// True for b >= 2; the meridian is neither integral nor non-integral.
bool is_non_integral(const Slope& s);
/// Numerator even and denominator odd, i.e. the slope has the form 2a/b.
bool has_even_numerator(const Slope& s);

/// A point of H_1(boundary; Z) written in (meridian, longitude) coordinates.
struct LatticePoint {
  Integer x;
  Integer y;

  bool is_primitive() const { return gcd(x, y) == 1; }
  /// The slope x/y; throws for the origin.
  Slope slope() const { return Slope(x, y); }

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

inline LatticePoint lattice_point(const Slope& s) { return {s.num(), s.den()}; }

}  // namespace pretzel
