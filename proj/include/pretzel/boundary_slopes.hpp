#pragma once

#include <string>
#include <vector>

#include "pretzel/knot.hpp"
#include "pretzel/slope.hpp"

namespace pretzel {

enum class Completeness {
  /// The set contains every non-integral boundary slope (possibly plus
  /// formula values that are only candidates).
  kAllNonintegral,
  /// An explicit list of all boundary slopes.
  kFullList,
  /// No closed form is available; the set must not be used for exclusion.
  kCandidateOnly,
};

std::string to_string(Completeness c);

struct BoundarySlopeSet {
  std::vector<Slope> slopes;  // reduced, sorted, deduplicated
  Completeness completeness = Completeness::kAllNonintegral;
  /// Closed-form values that reduced to integers and were dropped.
  std::vector<Slope> evaluated_integral;
};

/// (n^2 - n - 5) / ((n - 3)/2), the non-integral slope contributed by an odd
/// index n >= 7 of a (-2,p,q) pretzel knot.
Slope minus2_branch_slope(long long n);

/// (n(n-1) + 1 - 3r) / ((n - 1 - r)/2) for the (p,q,-r) family with n >= 2r+1.
Slope large_index_slope(long long n, long long r);

/// 2(p + q + r - 1 - (p-1)(q-1)/(p+q-2)), the only possible non-integral slope
/// of a (p,q,-r) pretzel knot with p < r.
Rational small_index_value(long long p, long long q, long long r);

/// Non-integral boundary slopes of (-2,p,q); requires 3 <= p <= q odd.
BoundarySlopeSet nonintegral_slopes_minus2_pq(long long p, long long q);

/// All boundary slopes of (-2,5,q), q >= 5 odd.
BoundarySlopeSet slope_list_minus2_5_q(long long q);

/// The six boundary slopes of (-2,5,q) in their conventional order
/// 0, 14, 15, (q^2-q-5)/((q-3)/2), 2q+10, 2q+12, without merging.
std::vector<Slope> slope_sequence_minus2_5_q(long long q);

/// Non-integral boundary slopes of the (p,q,-r) pretzel knot,
/// 3 <= p <= q odd, r >= 4 even.
BoundarySlopeSet nonintegral_slopes_pq_minus_r(long long p, long long q, long long r);

/// 2(p+q) for the two odd indices. Throws std::domain_error outside the
/// MINUS2_PQ and PQ_MINUS_R families.
Slope toroidal_slope(const PretzelKnot& k);

}  // namespace pretzel
