#include "pretzel/triangle_chars.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace pretzel {

TriangleTriple::TriangleTriple(std::int64_t p_, std::int64_t q_, std::int64_t r_)
    : p(p_), q(q_), r(r_) {
  if (p < 2 || q < 2 || r < 2) {
    throw std::invalid_argument("triangle group orders must be >= 2, got (" + std::to_string(p) +
                                "," + std::to_string(q) + "," + std::to_string(r) + ")");
  }
}

std::int64_t total_char_count(const TriangleTriple& t) {
  const auto half = [](std::int64_t v) { return v / 2; };
  const auto upper = [&](std::int64_t v) { return v - half(v) - 1; };
  return upper(t.p) * upper(t.q) * upper(t.r) + half(t.p) * half(t.q) * half(t.r) +
         half(std::gcd(t.p, t.q)) + half(std::gcd(t.p, t.r)) + half(std::gcd(t.q, t.r)) + 1;
}

std::int64_t reducible_char_count(const TriangleTriple& t) {
  const std::int64_t a = std::gcd(std::gcd(t.p, t.q), t.r);
  const std::int64_t b = std::gcd(std::gcd(t.p * t.q, t.p * t.r), t.q * t.r);
  return b / 2 + (a % 2 == 0 ? 2 : 1);
}

std::int64_t irreducible_char_count(const TriangleTriple& t) {
  const std::int64_t d = total_char_count(t) - reducible_char_count(t);
  if (d < 0) throw std::logic_error("negative irreducible character count");
  return d;
}

}  // namespace pretzel
