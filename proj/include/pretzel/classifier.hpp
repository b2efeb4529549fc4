#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pretzel/facts.hpp"
#include "pretzel/knot.hpp"
#include "pretzel/slope.hpp"

namespace pretzel {

enum class Question { kCyclic, kFinite };
enum class SlopeStatus { kRealizedKnown, kEliminated, kUnresolved };
enum class Verdict { kNone, kRealized, kTorus, kUnresolved };

std::string to_string(Question q);
std::string to_string(SlopeStatus s);
std::string to_string(Verdict v);
Question parse_question(const std::string& text);
SlopeStatus parse_slope_status(const std::string& text);

using RuleInputs = std::vector<std::pair<std::string, std::string>>;

struct RuleApplication {
  std::string id;
  RuleInputs inputs;
  std::string conclusion;

  /// Value for `key`; throws std::out_of_range when absent.
  const std::string& input(const std::string& key) const;
  friend bool operator==(const RuleApplication&, const RuleApplication&) = default;
};

struct CandidateSlope {
  Slope slope;
  SlopeStatus status = SlopeStatus::kUnresolved;
  /// Index of the deciding rule application in Certificate::rules.
  std::size_t step = 0;
  friend bool operator==(const CandidateSlope&, const CandidateSlope&) = default;
};

struct Certificate {
  PretzelKnot knot;
  Question question = Question::kCyclic;
  std::vector<RuleApplication> rules;
  std::vector<CandidateSlope> candidates;
  std::vector<std::string> annotations;

  /// Derived from the rule effects and candidate statuses only.
  Verdict verdict() const;
  /// REALIZED_KNOWN slopes in candidate order.
  std::vector<Slope> realized() const;
  /// Number of UNRESOLVED_BY_PAPER candidates.
  std::size_t unresolved_count() const;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Throws std::domain_error for a link.
Certificate classify_cyclic(const PretzelKnot& k);
Certificate classify_finite(const PretzelKnot& k);
Certificate classify(const PretzelKnot& k, Question q);

/// Odd integers u with a non-integral boundary slope in (u-1, u+1), for a
/// PQ_MINUS_R knot satisfying the hyperbolicity condition. Throws
/// std::domain_error when the boundary slope set is CANDIDATE_ONLY or the
/// knot is outside the family, std::invalid_argument when the condition fails.
std::vector<Slope> finite_candidate_slopes(const PretzelKnot& k);

/// Applicability of the Coxeter quotient argument: the triangle group
/// Delta(2,a,b) is hyperbolic and (a,c) is not (3, <= 3). Coset enumeration
/// shows several (2,3,b;2) and (2,3,b;3) groups to be finite although the
/// finiteness list calls them infinite, so those are excluded.
bool coxeter_rule_applies(long long a, long long b, long long c);

/// The signature used to eliminate an odd slope s via index n (p or q), or
/// nullopt when no signature is available or the rule does not apply.
struct CoxeterElimination {
  long long index;
  long long a, b, c;
};
std::optional<CoxeterElimination> coxeter_elimination(long long p, long long q, long long r,
                                                      const Slope& s);

struct ReplayFailure {
  std::size_t step;
  std::string id;
  std::string reason;
};

/// Re-evaluates every rule premise from its recorded inputs, and checks that
/// candidate statuses match the effects of the rules they reference.
std::vector<ReplayFailure> replay(const Certificate& c);

}  // namespace pretzel
