#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "pretzel/knot.hpp"
#include "pretzel/slope.hpp"

namespace pretzel {

/// How a rule contributes to a certificate verdict.
enum class RuleEffect {
  kTorus,         // knot is a torus knot
  kNone,          // knot-level: no non-trivial filling of the asked kind
  kUnresolved,    // knot-level: no available argument decides the question
  kCandidates,    // fixes the list of candidate slopes
  kSlope,         // decides a single candidate slope
  kAnnotation,    // recorded deduction that changes no status
};

struct RuleInfo {
  std::string_view id;
  RuleEffect effect;
  std::string_view citation;
  std::string_view anchor;  // short statement of the imported or computed fact
};

/// Every rule id the classifier can emit, in a fixed order.
const std::vector<RuleInfo>& rule_catalog();

/// Throws std::invalid_argument for an unknown id.
const RuleInfo& rule_info(std::string_view id);

/// Non-trivial filling slopes known to exist, from the literature.
struct KnownSurgeries {
  std::vector<Slope> slopes;
  std::string citation;
};

/// Known cyclic slopes of a (-2,3,q) knot; nullopt outside that family.
std::optional<KnownSurgeries> known_cyclic(const PretzelKnot& k);

/// Known finite slopes of a (-2,3,q) knot; nullopt outside that family.
std::optional<KnownSurgeries> known_finite(const PretzelKnot& k);

/// Slopes whose filling was shown hyperbolic by a volume computation.
bool known_hyperbolic_filling(const PretzelKnot& k, const Slope& s);

/// (p,q,-r) knots with 3 <= p <= 7 and 4 <= r <= 10, together with the
/// three knots where the at-most-one-finite-slope theorem does not apply,
/// were checked case by case in the literature and have no non-trivial finite
/// fillings.
bool residual_case_analysis_covers(const PretzelKnot& k);

}  // namespace pretzel
