#include "pretzel/boundary_slopes.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace pretzel {

namespace {

bool odd(long long v) { return (v % 2) != 0; }

void require_odd_pair(long long p, long long q) {
  if (!odd(p) || !odd(q) || p < 3 || q < p) {
    throw std::invalid_argument("expected odd 3 <= p <= q, got p=" + std::to_string(p) +
                                " q=" + std::to_string(q));
  }
}

void normalize(std::vector<Slope>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Routes a closed-form value into the non-integral list or the dropped list.
void add_nonintegral(BoundarySlopeSet& set, const Slope& s) {
  if (s.is_integral()) {
    set.evaluated_integral.push_back(s);
  } else {
    set.slopes.push_back(s);
  }
}

}  // namespace

std::string to_string(Completeness c) {
  switch (c) {
    case Completeness::kAllNonintegral: return "ALL_NONINTEGRAL";
    case Completeness::kFullList: return "FULL_LIST";
    case Completeness::kCandidateOnly: return "CANDIDATE_ONLY";
  }
  return "CANDIDATE_ONLY";
}

Slope minus2_branch_slope(long long n) {
  const Integer nn(n);
  return Slope(nn * nn - nn - 5, (nn - 3) / 2);
}

Slope large_index_slope(long long n, long long r) {
  const Integer nn(n);
  return Slope(nn * (nn - 1) + 1 - 3 * Integer(r), (nn - 1 - r) / 2);
}

Rational small_index_value(long long p, long long q, long long r) {
  const Rational frac(Integer(p - 1) * (q - 1), Integer(p - 1 + q - 1));
  return 2 * (Rational(Integer(p) + q + r - 1) - frac);
}

BoundarySlopeSet nonintegral_slopes_minus2_pq(long long p, long long q) {
  require_odd_pair(p, q);
  BoundarySlopeSet set;
  set.completeness = Completeness::kAllNonintegral;
  if (p >= 7) add_nonintegral(set, minus2_branch_slope(p));
  if (q >= 7) add_nonintegral(set, minus2_branch_slope(q));
  normalize(set.slopes);
  normalize(set.evaluated_integral);
  return set;
}

std::vector<Slope> slope_sequence_minus2_5_q(long long q) {
  if (!odd(q) || q < 5) {
    throw std::invalid_argument("(-2,5,q) needs odd q >= 5, got " + std::to_string(q));
  }
  return {Slope(0), Slope(14), Slope(15), minus2_branch_slope(q), Slope(2 * q + 10),
          Slope(2 * q + 12)};
}

BoundarySlopeSet slope_list_minus2_5_q(long long q) {
  BoundarySlopeSet set;
  set.completeness = Completeness::kFullList;
  set.slopes = slope_sequence_minus2_5_q(q);
  normalize(set.slopes);
  return set;
}

BoundarySlopeSet nonintegral_slopes_pq_minus_r(long long p, long long q, long long r) {
  require_odd_pair(p, q);
  if (odd(r) || r < 4) {
    throw std::invalid_argument("expected even r >= 4, got r=" + std::to_string(r));
  }
  BoundarySlopeSet set;
  if (p >= 2 * r + 1) {
    set.completeness = Completeness::kAllNonintegral;
    add_nonintegral(set, large_index_slope(p, r));
    add_nonintegral(set, large_index_slope(q, r));
  } else if (p < r) {
    set.completeness = Completeness::kAllNonintegral;
    const Rational v = small_index_value(p, q, r);
    add_nonintegral(set, Slope(boost::multiprecision::numerator(v),
                               boost::multiprecision::denominator(v)));
  } else {
    set.completeness = Completeness::kCandidateOnly;
  }
  normalize(set.slopes);
  normalize(set.evaluated_integral);
  return set;
}

Slope toroidal_slope(const PretzelKnot& k) {
  const KnotFamily f = family(k);
  if (f.tag != FamilyTag::kMinus2PQ && f.tag != FamilyTag::kPQMinusR) {
    throw std::domain_error("no toroidal slope formula for " + k.str());
  }
  return Slope(2 * (f.p + f.q));
}

}  // namespace pretzel
