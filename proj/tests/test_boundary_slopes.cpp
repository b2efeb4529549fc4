#include <doctest.h>

#include "oracles.hpp"
#include "pretzel/boundary_slopes.hpp"

using namespace pretzel;

namespace {

Rational q_of(long long a, long long b) { return Rational(a) / b; }

}  // namespace

TEST_CASE("(-2,p,q) non-integral slopes") {
  CHECK(nonintegral_slopes_minus2_pq(7, 7).slopes == std::vector<Slope>{make_slope(37, 2)});
  CHECK(nonintegral_slopes_minus2_pq(3, 9).slopes == std::vector<Slope>{make_slope(67, 3)});
  CHECK(nonintegral_slopes_minus2_pq(3, 5).slopes.empty());
  CHECK(nonintegral_slopes_minus2_pq(5, 5).slopes.empty());
  CHECK_THROWS_AS(nonintegral_slopes_minus2_pq(4, 7), std::invalid_argument);
  CHECK_THROWS_AS(nonintegral_slopes_minus2_pq(9, 7), std::invalid_argument);
}

TEST_CASE("(-2,5,q) boundary slope lists") {
  const auto nine = slope_sequence_minus2_5_q(9);
  CHECK(nine == std::vector<Slope>{Slope(0), Slope(14), Slope(15), make_slope(67, 3), Slope(28),
                                   Slope(30)});
  const auto five = slope_sequence_minus2_5_q(5);
  CHECK(five[3] == Slope(15));
  CHECK(five[4] == Slope(20));
  CHECK(five[5] == Slope(22));
  CHECK(slope_list_minus2_5_q(5).slopes.size() == 5);  // 15 appears twice
  CHECK(slope_sequence_minus2_5_q(7)[3] == make_slope(37, 2));
}

TEST_CASE("(p,q,-r) non-integral slopes") {
  const auto a = nonintegral_slopes_pq_minus_r(9, 9, 4);
  CHECK(a.slopes == std::vector<Slope>{make_slope(61, 2)});
  CHECK(a.completeness == Completeness::kAllNonintegral);

  const auto b = nonintegral_slopes_pq_minus_r(3, 3, 4);
  CHECK(b.slopes.empty());
  CHECK(b.completeness == Completeness::kAllNonintegral);
  CHECK(b.evaluated_integral == std::vector<Slope>{Slope(16)});
  const auto c = nonintegral_slopes_pq_minus_r(3, 5, 6);
  CHECK(c.slopes == std::vector<Slope>{make_slope(70, 3)});
  CHECK(small_index_value(3, 3, 4) == 16);
  CHECK(small_index_value(3, 5, 6) == q_of(70, 3));
  CHECK(nonintegral_slopes_pq_minus_r(5, 7, 4).completeness == Completeness::kCandidateOnly);
}

TEST_CASE("toroidal slopes") {
  CHECK(toroidal_slope(canonicalize(-2, 3, 7)) == Slope(20));
  CHECK(toroidal_slope(canonicalize(-2, 5, 9)) == Slope(28));
  CHECK(toroidal_slope(canonicalize(3, 5, -4)) == Slope(16));
  CHECK_THROWS_AS(toroidal_slope(canonicalize(3, 5, 7)), std::domain_error);
}

TEST_CASE("property: (-2,p,q) branch slopes match the closed forms") {
  for (long long n = 7; n <= 99; n += 2) {
    const Slope s = minus2_branch_slope(n);
    const long long m = (n - 3) / 2;
    CHECK(s.den() == m);  // no hidden common factor
    CHECK(s.value() == Rational(n * n - n - 5) / m);
    CHECK(s.value() == Rational(2 * n + 4) + Rational(1) / m);
  }
}

TEST_CASE("property: large-index slopes satisfy the gap identity") {
  for (long long r = 4; r <= 30; r += 2) {
    for (long long p = 2 * r + 1; p <= 2 * r + 41; p += 2) {
      for (long long q = p; q <= p + 20; q += 2) {
        const Rational m = Rational(p - 1 - r) / 2;
        const Rational eq3 = Rational(p * (p - 1) + 1 - 3 * r) / m;
        CHECK(large_index_slope(p, r).value() == eq3);
        const Rational lhs = Rational(2 * (p + q)) - eq3;
        const Rational rhs = Rational(2 * q - 2 * r) - Rational((r - 1) * (r - 1)) / m;
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("property: small-index value matches the closed form") {
  for (long long p = 3; p <= 21; p += 2) {
    for (long long q = p; q <= 31; q += 2) {
      for (long long r = p + 1; r <= 40; r += 2) {
        const Rational expected =
            2 * (Rational(p + q + r - 1) - Rational((p - 1) * (q - 1)) / (p + q - 2));
        CHECK(small_index_value(p, q, r) == expected);
        const auto set = nonintegral_slopes_pq_minus_r(p, q, r);
        CHECK(set.completeness == Completeness::kAllNonintegral);
        const bool integral = boost::multiprecision::denominator(expected) == 1;
        CHECK(set.slopes.empty() == integral);
        CHECK(set.evaluated_integral.empty() == !integral);
      }
    }
  }
}
