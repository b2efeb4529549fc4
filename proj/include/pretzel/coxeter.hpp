#pragma once

#include <string>

#include "pretzel/presentation.hpp"

namespace pretzel {

enum class Finiteness { kFinite, kInfinite, kException };

std::string to_string(Finiteness f);

struct FinitenessVerdict {
  Finiteness status = Finiteness::kInfinite;
  /// Roman numeral of the matching clause for FINITE, empty otherwise.
  std::string clause;
};

/// Edjvet's classification of finite (2,a,b;c) groups. FINITE when one of
/// the eleven listed families matches, EXCEPTION for (2,3,13;4), INFINITE
/// otherwise. The list is stated for the case where the triangle group
/// Delta(2,a,b) is hyperbolic; outside that range the INFINITE answer is the
/// literal reading of the list only (see `triangle_is_hyperbolic`).
///
/// Throws std::invalid_argument for an unnormalized signature.
FinitenessVerdict edjvet_verdict(const CoxeterSignature& sig);

/// 1/a + 1/b < 1/2, i.e. Delta(2,a,b) is a hyperbolic triangle group. When
/// this fails, (2,a,b;c) is a quotient of a finite or Euclidean triangle group.
bool triangle_is_hyperbolic(const CoxeterSignature& sig);

}  // namespace pretzel
