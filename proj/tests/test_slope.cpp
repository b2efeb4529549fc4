#include <doctest.h>

#include "oracles.hpp"
#include "pretzel/slope.hpp"

using namespace pretzel;

TEST_CASE("slope normalization") {
  CHECK(make_slope(36, 2) == Slope(18));
  CHECK(make_slope(-19, -1) == Slope(19));
  CHECK(make_slope(1, 0).is_meridian());
  CHECK(make_slope(-3, 0) == Slope::meridian());
  CHECK(make_slope(4, -6).str() == "-2/3");
  CHECK_THROWS_AS(make_slope(0, 0), std::invalid_argument);
  CHECK(Slope::meridian().str() == "1/0");
}

TEST_CASE("slope distance examples") {
  CHECK(distance(Slope(18), Slope(19)) == 1);
  CHECK(distance(Slope(22), make_slope(67, 3)) == 1);
  CHECK(distance(Slope::meridian(), make_slope(17, 2)) == 2);
}

TEST_CASE("slope parity predicates") {
  CHECK(is_even_integral(Slope(18)));
  CHECK_FALSE(is_odd_integral(Slope(18)));
  CHECK(is_odd_integral(Slope(-7)));
  CHECK(is_half_integral(make_slope(17, 2)));
  CHECK(is_non_integral(make_slope(37, 2)));
  CHECK_FALSE(is_non_integral(Slope::meridian()));
  CHECK(has_even_numerator(make_slope(22, 3)));
  CHECK_FALSE(has_even_numerator(make_slope(17, 2)));
  CHECK(has_even_numerator(Slope(20)));
}

TEST_CASE("slope parsing") {
  CHECK(parse_slope("37/2") == make_slope(37, 2));
  CHECK(parse_slope("-4") == Slope(-4));
  CHECK(parse_slope("6/4") == make_slope(3, 2));
  CHECK_THROWS_AS(parse_slope("a/b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_slope("0/0"), std::invalid_argument);
}

TEST_CASE("slope arithmetic is arbitrary precision") {
  const Integer big = Integer(1) << 200;
  const Slope s((big + 1) * 6, Integer(4));
  CHECK(s.den() == 2);
  CHECK(s.num() == (big + 1) * 3);
  CHECK(distance(s, Slope::meridian()) == 2);
}

TEST_CASE("property: distance is symmetric and separates slopes") {
  for (int i = 0; i < 2000; ++i) {
    const Integer a = oracle::uniform(-500, 500), b = oracle::uniform(0, 60);
    const Integer c = oracle::uniform(-500, 500), d = oracle::uniform(0, 60);
    if ((a == 0 && b == 0) || (c == 0 && d == 0)) continue;
    const Slope s(a, b), t(c, d);
    const Integer dst = distance(s, t);
    CHECK(dst == distance(t, s));
    CHECK(dst >= 0);
    CHECK((dst == 0) == (s == t));
    CHECK(dst == oracle::cross(s.num(), s.den(), t.num(), t.den()));
    CHECK(distance(Slope::meridian(), s) == s.den());
    CHECK(make_slope(s.num(), s.den()) == s);
  }
}

TEST_CASE("slope ordering puts the meridian last") {
  CHECK(Slope(3) < make_slope(7, 2));
  CHECK(make_slope(-1, 2) < Slope(0));
  CHECK(Slope(1000) < Slope::meridian());
}
