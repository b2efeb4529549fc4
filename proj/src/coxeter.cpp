#include "pretzel/coxeter.hpp"

#include <stdexcept>

namespace pretzel {

std::string to_string(Finiteness f) {
  switch (f) {
    case Finiteness::kFinite: return "FINITE";
    case Finiteness::kInfinite: return "INFINITE";
    case Finiteness::kException: return "EXCEPTION";
  }
  throw std::logic_error("bad Finiteness");
}

namespace {

std::string clause_for(long long a, long long b, long long c) {
  if (a == 2) return "i";
  if (a == 3) {
    if (b <= 6 && c >= 4) return "ii";
    if (b == 7 && c >= 4 && c <= 8) return "iii";
    if ((b == 8 || b == 9) && c >= 4 && c <= 5) return "iv";
    if ((b == 10 || b == 11) && c == 4) return "v";
    return {};
  }
  if (a == 4) {
    if (c == 2) return "vi";
    if (b == 4) return "vii";
    if (b == 5 && c <= 4) return "viii";
    if (b == 7 && c == 3) return "ix";
    return {};
  }
  if (a == 5 && b <= 9 && c == 2) return "x";
  if (a == 6 && b == 7 && c == 2) return "xi";
  return {};
}

}  // namespace

FinitenessVerdict edjvet_verdict(const CoxeterSignature& sig) {
  if (sig.a < 2 || sig.b < sig.a || sig.c < 2) {
    throw std::invalid_argument("unnormalized signature " + sig.str());
  }
  if (sig.a == 3 && sig.b == 13 && sig.c == 4) return {Finiteness::kException, {}};
  std::string clause = clause_for(sig.a, sig.b, sig.c);
  if (clause.empty()) return {Finiteness::kInfinite, {}};
  return {Finiteness::kFinite, std::move(clause)};
}

bool triangle_is_hyperbolic(const CoxeterSignature& sig) {
  // 1/a + 1/b < 1/2  <=>  2(a + b) < ab
  return 2 * (sig.a + sig.b) < sig.a * sig.b;
}

}  // namespace pretzel
