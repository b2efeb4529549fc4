#pragma once

// Independent recomputations used to cross-check library results. Nothing
// here calls into the library's arithmetic beyond the exact number types.

#include <cstdint>
#include <numeric>
#include <random>

#include "pretzel/integer.hpp"

namespace oracle {

using pretzel::Integer;
using pretzel::Rational;

inline Integer cross(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  const Integer v = a * d - b * c;
  return v < 0 ? Integer(-v) : v;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eedULL);
  return gen;
}

inline long long uniform(long long lo, long long hi) {
  return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline long long random_odd(long long lo, long long hi) {
  long long v = uniform(lo, hi);
  return v % 2 == 0 ? v + 1 : v;
}

}  // namespace oracle
