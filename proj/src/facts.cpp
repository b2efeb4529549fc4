#include "pretzel/facts.hpp"

#include <algorithm>
#include <stdexcept>

namespace pretzel {

const std::vector<RuleInfo>& rule_catalog() {
  static const std::vector<RuleInfo> catalog = {
      {"TORUS_KNOT", RuleEffect::kTorus,
       "Kawauchi, classification of pretzel knots",
       "a pretzel knot with all |indices| > 1 is torus only for (-2,3,3) and (-2,3,5); "
       "(-2,1,n) is the (2,n) torus knot"},
      {"UNCLASSIFIED_INDEX", RuleEffect::kUnresolved,
       "Kawauchi, classification of pretzel knots",
       "an index of absolute value 1 outside the (-2,1,n) pattern is not handled"},
      {"NON_PRETZEL_FAMILY", RuleEffect::kNone,
       "Delman, essential laminations and Dehn surgery on pretzel knots",
       "a pretzel knot with a non-trivial cyclic or finite filling has the form (p,q,-r), "
       "r >= 2 even, 3 <= p <= q odd"},
      {"NO_Z_FILLING", RuleEffect::kNone,
       "Gabai, foliations and the topology of 3-manifolds III",
       "only the trivial knot has a filling with fundamental group Z, so a cyclic filling "
       "would be finite"},
      {"KNOWN_RESULTS", RuleEffect::kCandidates,
       "Fintushel-Stern; Bleiler-Hodgson; classification of cyclic and finite surgeries "
       "on (-2,3,n) pretzel knots",
       "the non-trivial fillings of (-2,3,q) of the requested kind are exactly the listed "
       "slopes"},
      {"CYCLIC_NO_NONINTEGRAL", RuleEffect::kNone,
       "Dunfield, cyclic surgery, degrees of maps of character curves, and volume rigidity",
       "a non-trivial cyclic slope lies within distance 1 of a non-integral boundary slope"},
      {"CYCLIC_PROXIMITY", RuleEffect::kCandidates,
       "Dunfield, cyclic surgery, degrees of maps of character curves, and volume rigidity",
       "a non-trivial cyclic slope is an integer adjacent to a non-integral boundary slope"},
      {"LENS_TOROIDAL_DISTANCE", RuleEffect::kSlope,
       "Gordon, Dehn filling: a survey; Gordon, toroidal Dehn fillings",
       "a lens space filling and a toroidal filling are at distance at most 5"},
      {"HYPERBOLIC_FILLING", RuleEffect::kSlope,
       "Weeks, SnapPea",
       "the filling is hyperbolic, hence not cyclic"},
      {"NORM_INFEASIBLE", RuleEffect::kSlope,
       "Culler-Gordon-Luecke-Shalen; Boyer-Zhang",
       "a cyclic slope and the meridian both realize the minimal total norm; the resulting "
       "linear system admits no norm with two nonzero coefficients"},
      {"FINITE_OPEN", RuleEffect::kUnresolved,
       "Delman; cyclic classification of (-2,p,q) pretzel knots",
       "finite fillings of (-2,p,q) with p >= 5 are not decided; any such filling is not "
       "cyclic"},
      {"RESIDUAL_KNOT", RuleEffect::kNone,
       "case analysis of (p,q,-r) pretzel knots with 3 <= p <= 7, 4 <= r <= 10, with SnapPea "
       "checks",
       "the knot has no non-trivial finite filling"},
      {"FINITE_INTEGRAL_ONLY", RuleEffect::kAnnotation,
       "Boyer-Zhang, finite Dehn surgery on knots; Culler-Shalen norm convexity",
       "a finite slope a/b has b <= 2, and a half-integral slope forces an even neighbour "
       "to norm at most S+4, against the S+12 bound for even fillings"},
      {"FINITE_NO_NONINTEGRAL", RuleEffect::kNone,
       "Boyer-Zhang; Hatcher-Oertel boundary slopes",
       "a finite slope is odd integral with a non-integral boundary slope in (u-1,u+1); "
       "there is none"},
      {"FINITE_PROXIMITY", RuleEffect::kCandidates,
       "Boyer-Zhang; Hatcher-Oertel boundary slopes",
       "a finite slope is an integer adjacent to a non-integral boundary slope"},
      {"FINITE_TOROIDAL_WINDOW", RuleEffect::kCandidates,
       "Agol, bounds on exceptional Dehn filling; Lackenby, word hyperbolic Dehn surgery",
       "exceptional slopes are at distance at most 10 from the toroidal slope 2(p+q)"},
      {"EVEN_FILLING_INFINITE", RuleEffect::kSlope,
       "Boyer-Zhang; representations onto triangle groups",
       "a slope 2a/b with b odd has infinite fundamental group"},
      {"LARGE_INDEX_GAP", RuleEffect::kAnnotation,
       "Agol; Lackenby; Hatcher-Oertel boundary slopes",
       "for p > 2r+1 both non-integral boundary slopes are at least 11 from 2(p+q)"},
      {"SMALL_INDEX_GAP", RuleEffect::kAnnotation,
       "Agol; Lackenby; Hatcher-Oertel boundary slopes",
       "for p <= r-5 the non-integral boundary slope is more than 10 from 2(p+q)"},
      {"EXCEPTIONAL_DISTANCE", RuleEffect::kSlope,
       "Agol, bounds on exceptional Dehn filling; Lackenby, word hyperbolic Dehn surgery",
       "exceptional slopes are at distance at most 10 from the toroidal slope"},
      {"COXETER_QUOTIENT_INFINITE", RuleEffect::kSlope,
       "Coxeter, the groups (2,a,b;c); Edjvet, on the finiteness of (2,a,b;c)",
       "the filled group surjects onto (2,n,|s-2n|;r/2), which is infinite"},
      {"RESIDUAL_CASE", RuleEffect::kSlope,
       "case analysis of (p,q,-r) pretzel knots with 3 <= p <= 7, 4 <= r <= 10, with SnapPea "
       "checks",
       "no non-trivial finite filling in the residual range"},
      {"UNIQUE_ODD", RuleEffect::kAnnotation,
       "Boyer-Zhang; Culler-Shalen norm convexity",
       "two odd finite slopes would force an even slope between them to norm at most S+8"},
      {"UNCOVERED", RuleEffect::kUnresolved, "none",
       "no available rule decides this slope"},
  };
  return catalog;
}

const RuleInfo& rule_info(std::string_view id) {
  const auto& catalog = rule_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const RuleInfo& r) { return r.id == id; });
  if (it == catalog.end()) throw std::invalid_argument("unknown rule id " + std::string(id));
  return *it;
}

namespace {

constexpr const char* kMinus2_3Citation =
    "Fintushel-Stern; Bleiler-Hodgson; classification of surgeries on (-2,3,n) pretzel knots";

// (-2,3,q) with q >= 7 odd, the range covered by the table.
std::optional<long long> minus2_3_q(const PretzelKnot& k) {
  const auto& i = k.indices();
  if (i[0] != -2 || i[1] != 3 || i[2] < 7 || i[2] % 2 == 0) return std::nullopt;
  return i[2];
}

}  // namespace

std::optional<KnownSurgeries> known_cyclic(const PretzelKnot& k) {
  const auto q = minus2_3_q(k);
  if (!q) return std::nullopt;
  KnownSurgeries out{{}, kMinus2_3Citation};
  if (*q == 7) out.slopes = {Slope(18), Slope(19)};
  return out;
}

std::optional<KnownSurgeries> known_finite(const PretzelKnot& k) {
  const auto q = minus2_3_q(k);
  if (!q) return std::nullopt;
  KnownSurgeries out{{}, kMinus2_3Citation};
  if (*q == 7) out.slopes = {Slope(17), Slope(18), Slope(19)};
  if (*q == 9) out.slopes = {Slope(22), Slope(23)};
  return out;
}

bool known_hyperbolic_filling(const PretzelKnot& k, const Slope& s) {
  return k == canonicalize(-2, 5, 7) && s == Slope(19);
}

bool residual_case_analysis_covers(const PretzelKnot& k) {
  const KnotFamily f = family(k);
  if (f.tag != FamilyTag::kPQMinusR) return false;
  if (f.p >= 3 && f.p <= 7 && f.r >= 4 && f.r <= 10) return true;
  return k == canonicalize(3, 3, -4) || k == canonicalize(3, 5, -4) ||
         k == canonicalize(3, 3, -6);
}

}  // namespace pretzel
