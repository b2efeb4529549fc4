#include <doctest.h>

#include <cstdlib>

#include "pretzel/classifier.hpp"
#include "pretzel/coxeter.hpp"
#include "pretzel/presentation.hpp"
#include "pretzel/todd_coxeter.hpp"

using namespace pretzel;

namespace {

FinitenessVerdict ev(long long a, long long b, long long c) {
  return edjvet_verdict(CoxeterSignature::normalized(a, b, c));
}

std::optional<std::uint64_t> order(long long a, long long b, long long c,
                                   std::size_t cap = kDefaultMaxCosets) {
  return todd_coxeter(coxeter_presentation(CoxeterSignature::normalized(a, b, c)), cap).order;
}

}  // namespace

TEST_CASE("finiteness list clauses") {
  CHECK(ev(2, 9, 2).clause == "i");
  CHECK(ev(3, 5, 4).clause == "ii");
  CHECK(ev(3, 7, 8).clause == "iii");
  CHECK(ev(3, 9, 5).clause == "iv");
  CHECK(ev(3, 11, 4).clause == "v");
  CHECK(ev(4, 15, 2).clause == "vi");
  CHECK(ev(4, 4, 9).clause == "vii");
  CHECK(ev(4, 5, 4).clause == "viii");
  CHECK(ev(4, 7, 3).clause == "ix");
  CHECK(ev(5, 9, 2).clause == "x");
  CHECK(ev(6, 7, 2).clause == "xi");
  CHECK(ev(3, 13, 4).status == Finiteness::kException);
  CHECK(ev(3, 7, 9).status == Finiteness::kInfinite);
  CHECK(ev(3, 12, 4).status == Finiteness::kInfinite);
  CHECK(ev(5, 10, 2).status == Finiteness::kInfinite);
  CHECK(ev(6, 7, 3).status == Finiteness::kInfinite);
  CHECK(ev(9, 13, 2).status == Finiteness::kInfinite);
  CHECK(ev(13, 3, 4).status == Finiteness::kException);
  CHECK_THROWS_AS(edjvet_verdict({5, 3, 2}), std::invalid_argument);
  CHECK_THROWS_AS(edjvet_verdict({3, 5, 1}), std::invalid_argument);
}

TEST_CASE("hyperbolic triangle test") {
  CHECK(triangle_is_hyperbolic({3, 7, 2}));
  CHECK_FALSE(triangle_is_hyperbolic({3, 6, 2}));
  CHECK_FALSE(triangle_is_hyperbolic({4, 4, 2}));
  CHECK(triangle_is_hyperbolic({4, 5, 2}));
  CHECK_FALSE(triangle_is_hyperbolic({2, 99, 2}));
}

TEST_CASE("coset enumeration on textbook groups") {
  const Word a = Word::gen(0), b = Word::gen(1);
  CHECK(todd_coxeter({{"x"}, {a.pow(7)}}).order == 7u);
  CHECK(todd_coxeter({{"x", "y"}, {a, b}}).order == 1u);
  CHECK(todd_coxeter({{"a", "b"}, {a.pow(2), b.pow(3), (a * b).pow(5)}}).order == 60u);
  CHECK(todd_coxeter({{"a", "b"}, {a.pow(2), b.pow(3), (a * b).pow(4)}}).order == 24u);
  CHECK(todd_coxeter({{"a", "b"}, {a.pow(2), b.pow(3), (a * b).pow(3)}}).order == 12u);
  // quaternion group
  CHECK(todd_coxeter({{"a", "b"}, {a.pow(4), a.pow(2) * b.pow(-2), b.inverse() * a * b * a}})
            .order == 8u);
  const auto free = todd_coxeter({{"x"}, {}}, 1000);
  CHECK_FALSE(free.finite());
  CHECK(free.cosets_defined <= 1000);
  const auto tri = todd_coxeter({{"a", "b"}, {a.pow(2), b.pow(3), (a * b).pow(7)}}, 20000);
  CHECK_FALSE(tri.finite());
  CHECK_THROWS_AS(todd_coxeter({{"x"}, {a.pow(3)}}, 0), std::invalid_argument);
}

TEST_CASE("dihedral groups have order 2b") {
  const Word R = Word::gen(0), S = Word::gen(1);
  for (long long n = 2; n <= 50; ++n) {
    const GroupPresentation g{{"R", "S"}, {R.pow(2), S.pow(n), (R * S).pow(2)}};
    CHECK(todd_coxeter(g).order == static_cast<std::uint64_t>(2 * n));
  }
}

TEST_CASE("finite signatures close with independently measured orders") {
  // orders confirmed separately with sympy's coset enumeration
  CHECK(order(2, 3, 3) == 6u);
  CHECK(order(2, 5, 2) == 2u);
  CHECK(order(3, 3, 4) == 12u);
  CHECK(order(3, 4, 4) == 2u);
  CHECK(order(3, 5, 4) == 1u);
  CHECK(order(3, 6, 4) == 96u);
  CHECK(order(3, 7, 4) == 168u);
  CHECK(order(3, 7, 5) == 1u);
  CHECK(order(3, 8, 4) == 336u);
  CHECK(order(3, 9, 4) == 12u);
  CHECK(order(4, 4, 3) == 72u);
  CHECK(order(4, 5, 3) == 120u);
  CHECK(order(4, 6, 2) == 72u);
  CHECK(order(5, 5, 2) == 80u);
  CHECK(order(5, 7, 2) == 1u);
}

TEST_CASE("infinite signatures inside the guard do not close") {
  for (auto [a, b, c] : std::vector<std::array<long long, 3>>{
           {3, 7, 9}, {5, 5, 3}, {3, 9, 6}, {7, 9, 2}, {5, 11, 2}}) {
    CHECK(ev(a, b, c).status == Finiteness::kInfinite);
    CHECK(coxeter_rule_applies(a, b, c));
    CHECK_FALSE(order(a, b, c, 100000).has_value());
  }
}

TEST_CASE("the guard covers every closing signature the list calls infinite") {
  // For each INFINITE signature with a <= 13, b <= 15, c <= 8 whose coset
  // enumeration closes, the Coxeter argument must not be applicable.
  int closed = 0;
  for (long long a = 2; a <= 13; ++a) {
    for (long long b = a; b <= 15; ++b) {
      for (long long c = 2; c <= 8; ++c) {
        if (ev(a, b, c).status != Finiteness::kInfinite) continue;
        if (!order(a, b, c, 200000).has_value()) continue;
        ++closed;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        CHECK_FALSE(coxeter_rule_applies(a, b, c));
      }
    }
  }
  CHECK(closed > 0);
  CHECK(order(3, 7, 3) == 1u);
  CHECK(order(3, 8, 3) == 96u);
}

TEST_CASE("cap is read from the environment") {
  ::setenv("PRETZEL_MAX_COSETS", "1234", 1);
  CHECK(default_max_cosets() == 1234u);
  ::setenv("PRETZEL_MAX_COSETS", "junk", 1);
  CHECK(default_max_cosets() == kDefaultMaxCosets);
  ::unsetenv("PRETZEL_MAX_COSETS");
  CHECK(default_max_cosets() == kDefaultMaxCosets);
}
