#include "pretzel/slope.hpp"

#include <regex>
#include <stdexcept>

namespace pretzel {

namespace {

const std::regex kIntegerPattern(R"(\s*([+-]?\d+)\s*)");
const std::regex kFractionPattern(R"(\s*([+-]?\d+)\s*/\s*([+-]?\d+)\s*)");

}  // namespace

Rational parse_rational(const std::string& text) {
  std::smatch m;
  if (std::regex_match(text, m, kIntegerPattern)) return Rational(Integer(m[1].str()));
  if (std::regex_match(text, m, kFractionPattern)) {
    Integer d(m[2].str());
    if (d == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(Integer(m[1].str()), d);
  }
  throw std::invalid_argument("malformed rational '" + text + "'");
}

Slope::Slope(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_ == 0 && b_ == 0) throw std::invalid_argument("slope 0/0 is undefined");
  Integer g = gcd(a_, b_);
  a_ /= g;
  b_ /= g;
  if (b_ < 0) {
    a_ = -a_;
    b_ = -b_;
  }
  // 1/0 and -1/0 are the same unoriented curve.
  if (b_ == 0) a_ = 1;
}

Rational Slope::value() const {
  if (is_meridian()) throw std::domain_error("the meridian 1/0 has no rational value");
  return Rational(a_, b_);
}

std::string Slope::str() const {
  if (b_ == 1) return a_.str();
  return a_.str() + "/" + b_.str();
}

std::strong_ordering operator<=>(const Slope& s, const Slope& t) {
  if (s.is_meridian() || t.is_meridian()) {
    if (s.is_meridian() && t.is_meridian()) return std::strong_ordering::equal;
    return s.is_meridian() ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  // Cross-multiplication is valid because both denominators are positive.
  const Integer lhs = s.num() * t.den();
  const Integer rhs = t.num() * s.den();
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Slope make_slope(const Integer& a, const Integer& b) { return Slope(a, b); }

Slope parse_slope(const std::string& text) {
  std::smatch m;
  if (std::regex_match(text, m, kIntegerPattern)) return Slope(Integer(m[1].str()), 1);
  if (std::regex_match(text, m, kFractionPattern)) {
    return Slope(Integer(m[1].str()), Integer(m[2].str()));
  }
  throw std::invalid_argument("malformed slope '" + text + "' (expected a/b or n)");
}

Integer distance(const Slope& s, const Slope& t) {
  return abs(s.num() * t.den() - s.den() * t.num());
}

bool is_even_integral(const Slope& s) { return s.den() == 1 && is_even(s.num()); }
bool is_odd_integral(const Slope& s) { return s.den() == 1 && is_odd(s.num()); }
bool is_half_integral(const Slope& s) { return s.den() == 2; }
bool is_non_integral(const Slope& s) { return s.den() >= 2; }
bool has_even_numerator(const Slope& s) { return is_even(s.num()) && is_odd(s.den()); }

}  // namespace pretzel
