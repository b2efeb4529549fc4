#pragma once

#include <array>
#include <string>

#include "pretzel/integer.hpp"

namespace pretzel {

/// A (p,q,r) pretzel knot up to permutation of the tangles and mirroring.
///
/// The stored triple is the mirror image with at most one negative index,
/// sorted ascending. With three nonzero indices exactly one of the two mirror
/// images has this property, so (-2,p,q) and (p,q,-r) families appear as
/// (-2,p,q) and (-r,p,q) respectively.
class PretzelKnot {
 public:
  const std::array<long long, 3>& indices() const { return idx_; }
  long long operator[](std::size_t i) const { return idx_[i]; }

  /// Two or more even indices give a two-component link.
  bool is_knot() const;

  std::string str() const;

  friend bool operator==(const PretzelKnot&, const PretzelKnot&) = default;
  friend auto operator<=>(const PretzelKnot&, const PretzelKnot&) = default;

 private:
  friend PretzelKnot canonicalize(long long, long long, long long);
  explicit PretzelKnot(std::array<long long, 3> idx) : idx_(idx) {}
  std::array<long long, 3> idx_;
};

/// Throws std::invalid_argument if any index is zero.
PretzelKnot canonicalize(long long p, long long q, long long r);

/// Parses "p,q,r" and canonicalizes.
PretzelKnot parse_pretzel(const std::string& text);

enum class FamilyTag {
  kTorus,
  kMinus2PQ,   // (-2, p, q), 3 <= p <= q odd, non-torus
  kPQMinusR,   // (-r, p, q), r >= 4 even, 3 <= p <= q odd
  kOther,
};

struct KnotFamily {
  FamilyTag tag = FamilyTag::kOther;
  // Odd indices p <= q and the magnitude r of the even index, when the
  // family has them; zero otherwise.
  long long p = 0;
  long long q = 0;
  long long r = 0;
};

KnotFamily family(const PretzelKnot& k);
std::string to_string(FamilyTag tag);

enum class TorusStatus {
  kTorus,
  kNotTorus,
  /// An index of absolute value 1 outside the (-2,1,n) pattern.
  kUnclassified,
};

TorusStatus torus_status(const PretzelKnot& k);
inline bool is_torus(const PretzelKnot& k) { return torus_status(k) == TorusStatus::kTorus; }

/// 1/|p| + 1/|q| + 2/|r| < 1 for odd p, q and even r, evaluated exactly.
/// Throws std::domain_error unless exactly one index is even.
bool hyperbolicity_condition(const PretzelKnot& k);

}  // namespace pretzel
