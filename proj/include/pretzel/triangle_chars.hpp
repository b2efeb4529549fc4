#pragma once

#include <cstdint>

namespace pretzel {

/// Orders of the generators of the triangle group
/// Delta(p,q,r) = <f,g,h | f^r, g^p, h^q, fgh>. All entries >= 2.
struct TriangleTriple {
  std::int64_t p;
  std::int64_t q;
  std::int64_t r;

  /// Throws std::invalid_argument if an entry is below 2.
  TriangleTriple(std::int64_t p, std::int64_t q, std::int64_t r);
};

/// Number of PSL2(C)-characters of Delta(p,q,r), reducible ones included.
std::int64_t total_char_count(const TriangleTriple& t);

/// Characters of H_1(Delta(p,q,r)) = Z/a + Z/(b/a), a = gcd(p,q,r),
/// b = gcd(pq,pr,qr).
std::int64_t reducible_char_count(const TriangleTriple& t);

/// total - reducible. Throws std::logic_error if negative.
std::int64_t irreducible_char_count(const TriangleTriple& t);

}  // namespace pretzel
