#include "pretzel/classifier.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pretzel/boundary_slopes.hpp"
#include "pretzel/coxeter.hpp"
#include "pretzel/cs_norm.hpp"
#include "pretzel/presentation.hpp"

namespace pretzel {

std::string to_string(Question q) { return q == Question::kCyclic ? "CYCLIC" : "FINITE"; }

std::string to_string(SlopeStatus s) {
  switch (s) {
    case SlopeStatus::kRealizedKnown: return "REALIZED_KNOWN";
    case SlopeStatus::kEliminated: return "ELIMINATED";
    case SlopeStatus::kUnresolved: return "UNRESOLVED_BY_PAPER";
  }
  throw std::logic_error("bad SlopeStatus");
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNone: return "NONE";
    case Verdict::kRealized: return "REALIZED";
    case Verdict::kTorus: return "TORUS";
    case Verdict::kUnresolved: return "UNRESOLVED_BY_PAPER";
  }
  throw std::logic_error("bad Verdict");
}

Question parse_question(const std::string& text) {
  if (text == "CYCLIC" || text == "cyclic") return Question::kCyclic;
  if (text == "FINITE" || text == "finite") return Question::kFinite;
  throw std::invalid_argument("unknown question '" + text + "'");
}

SlopeStatus parse_slope_status(const std::string& text) {
  for (auto s : {SlopeStatus::kRealizedKnown, SlopeStatus::kEliminated, SlopeStatus::kUnresolved}) {
    if (to_string(s) == text) return s;
  }
  throw std::invalid_argument("unknown slope status '" + text + "'");
}

const std::string& RuleApplication::input(const std::string& key) const {
  for (const auto& [k, v] : inputs) {
    if (k == key) return v;
  }
  throw std::out_of_range("rule " + id + " has no input '" + key + "'");
}

Verdict Certificate::verdict() const {
  if (rules.empty()) return Verdict::kUnresolved;
  bool unresolved = false;
  for (const RuleApplication& r : rules) {
    const RuleEffect e = rule_info(r.id).effect;
    if (e == RuleEffect::kTorus) return Verdict::kTorus;
    if (e == RuleEffect::kUnresolved) unresolved = true;
  }
  bool realized = false;
  for (const CandidateSlope& c : candidates) {
    if (c.status == SlopeStatus::kUnresolved) unresolved = true;
    if (c.status == SlopeStatus::kRealizedKnown) realized = true;
  }
  if (unresolved) return Verdict::kUnresolved;
  return realized ? Verdict::kRealized : Verdict::kNone;
}

std::vector<Slope> Certificate::realized() const {
  std::vector<Slope> out;
  for (const CandidateSlope& c : candidates) {
    if (c.status == SlopeStatus::kRealizedKnown) out.push_back(c.slope);
  }
  return out;
}

std::size_t Certificate::unresolved_count() const {
  return static_cast<std::size_t>(
      std::count_if(candidates.begin(), candidates.end(),
                    [](const CandidateSlope& c) { return c.status == SlopeStatus::kUnresolved; }));
}

namespace {

std::string join(const std::vector<Slope>& slopes) {
  std::string out;
  for (std::size_t i = 0; i < slopes.size(); ++i) {
    if (i) out += ",";
    out += slopes[i].str();
  }
  return out;
}

std::vector<Slope> split_slopes(const std::string& text) {
  std::vector<Slope> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(parse_slope(item));
  return out;
}

// The two integers on either side of each non-integral slope.
std::vector<Slope> adjacent_integers(const std::vector<Slope>& nonintegral) {
  std::set<Integer> ints;
  for (const Slope& s : nonintegral) {
    const Integer lo = floor_div(s.num(), s.den());
    ints.insert(lo);
    ints.insert(lo + 1);
  }
  std::vector<Slope> out;
  for (const Integer& n : ints) out.emplace_back(n, Integer(1));
  return out;
}

std::vector<Slope> toroidal_window(const Slope& t) {
  std::vector<Slope> out;
  for (Integer u = t.num() - 10; u <= t.num() + 10; ++u) out.emplace_back(u, Integer(1));
  return out;
}

Rational abs_rational(const Rational& x) { return x < 0 ? Rational(-x) : x; }

// Smaller of the gaps between 2(p+q) and the two large-index slopes.
Rational large_index_gap(long long p, long long q, long long r) {
  const Rational t = 2 * (p + q);
  return std::min(t - large_index_slope(p, r).value(), t - large_index_slope(q, r).value());
}

Rational small_index_gap(long long p, long long q, long long r) {
  return abs_rational(small_index_value(p, q, r) - Rational(2 * (p + q)));
}

bool norm_contradiction(long long q) {
  const PairwiseInfeasibility result = cyclic_infeasibility_minus2_5_q(q);
  if (!result.all_infeasible()) return false;
  return std::all_of(result.pairs.begin(), result.pairs.end(),
                     [&](const FeasibilityVerdict& v) { return verify(result.system, v); });
}

class Builder {
 public:
  Builder(const PretzelKnot& k, Question q) : cert_{k, q, {}, {}, {}} {}

  std::size_t add(std::string id, RuleInputs inputs, std::string conclusion) {
    rule_info(id);  // reject typos early
    cert_.rules.push_back({std::move(id), std::move(inputs), std::move(conclusion)});
    return cert_.rules.size() - 1;
  }

  void candidate(const Slope& s, SlopeStatus status, std::size_t step) {
    cert_.candidates.push_back({s, status, step});
  }

  void decide(const Slope& s, std::string id, RuleInputs inputs, std::string conclusion) {
    const bool unresolved = id == "UNCOVERED";
    const std::size_t step = add(std::move(id), std::move(inputs), std::move(conclusion));
    candidate(s, unresolved ? SlopeStatus::kUnresolved : SlopeStatus::kEliminated, step);
  }

  void annotate(std::string text) { cert_.annotations.push_back(std::move(text)); }

  const PretzelKnot& knot() const { return cert_.knot; }
  Certificate finish() { return std::move(cert_); }

 private:
  Certificate cert_;
};

RuleInputs knot_input(const PretzelKnot& k) { return {{"knot", k.str()}}; }

void require_knot(const PretzelKnot& k) {
  if (!k.is_knot()) throw std::domain_error(k.str() + " is a link, not a knot");
}

// Shared prefix: torus, unclassified and out-of-family knots. Returns true
// when the certificate is already complete.
bool knot_level_prefix(Builder& b, const char* what) {
  const PretzelKnot& k = b.knot();
  switch (torus_status(k)) {
    case TorusStatus::kTorus:
      b.add("TORUS_KNOT", knot_input(k),
            std::string("torus knot: infinitely many ") + what + " fillings");
      return true;
    case TorusStatus::kUnclassified:
      b.add("UNCLASSIFIED_INDEX", knot_input(k), "not decided");
      return true;
    case TorusStatus::kNotTorus:
      break;
  }
  if (family(k).tag == FamilyTag::kOther) {
    b.add("NON_PRETZEL_FAMILY", knot_input(k),
          std::string("not of the form (p,q,-r): no non-trivial ") + what + " filling");
    return true;
  }
  return false;
}

void known_results(Builder& b, Question q, const KnownSurgeries& known) {
  RuleInputs in = knot_input(b.knot());
  in.emplace_back("question", to_string(q));
  in.emplace_back("slopes", join(known.slopes));
  const std::string conclusion =
      known.slopes.empty() ? "no non-trivial filling of this kind"
                           : "non-trivial fillings at " + join(known.slopes);
  const std::size_t step = b.add("KNOWN_RESULTS", std::move(in), conclusion);
  for (const Slope& s : known.slopes) b.candidate(s, SlopeStatus::kRealizedKnown, step);
}

}  // namespace

Certificate classify_cyclic(const PretzelKnot& k) {
  require_knot(k);
  Builder b(k, Question::kCyclic);
  if (knot_level_prefix(b, "cyclic")) return b.finish();
  const KnotFamily f = family(k);

  if (f.tag == FamilyTag::kPQMinusR) {
    const Verdict finite = classify_finite(k).verdict();
    RuleInputs in = knot_input(k);
    in.emplace_back("finite_verdict", to_string(finite));
    if (finite == Verdict::kNone) {
      b.add("NO_Z_FILLING", std::move(in),
            "no non-trivial finite filling and no Z filling: no non-trivial cyclic filling");
    } else {
      b.add("UNCOVERED", std::move(in), "finite fillings not excluded");
    }
    return b.finish();
  }

  // (-2,p,q)
  if (f.p == 3) {
    known_results(b, Question::kCyclic, *known_cyclic(k));
    return b.finish();
  }
  const BoundarySlopeSet nonint = nonintegral_slopes_minus2_pq(f.p, f.q);
  if (nonint.slopes.empty()) {
    b.add("CYCLIC_NO_NONINTEGRAL", knot_input(k), "no non-integral boundary slope");
    return b.finish();
  }
  const std::vector<Slope> cands = adjacent_integers(nonint.slopes);
  RuleInputs prox = knot_input(k);
  prox.emplace_back("nonintegral", join(nonint.slopes));
  prox.emplace_back("candidates", join(cands));
  b.add("CYCLIC_PROXIMITY", std::move(prox), "candidates " + join(cands));

  const Slope t = toroidal_slope(k);
  for (const Slope& u : cands) {
    const Integer d = distance(u, t);
    if (d > 5) {
      b.decide(u, "LENS_TOROIDAL_DISTANCE",
               {{"slope", u.str()}, {"toroidal", t.str()}, {"distance", d.str()}},
               "distance " + d.str() + " to toroidal slope " + t.str() + " exceeds 5");
    } else if (known_hyperbolic_filling(k, u)) {
      b.decide(u, "HYPERBOLIC_FILLING", {{"slope", u.str()}}, "filling is hyperbolic");
    } else if (f.p == 5 && f.q >= 9 && u == Slope(2 * f.q + 5) && norm_contradiction(f.q)) {
      b.decide(u, "NORM_INFEASIBLE", {{"slope", u.str()}, {"q", std::to_string(f.q)}},
               "all 15 coefficient pairs infeasible with verified Farkas witnesses");
    } else {
      b.decide(u, "UNCOVERED", {{"slope", u.str()}}, "not decided");
    }
  }
  return b.finish();
}

bool coxeter_rule_applies(long long a, long long b, long long c) {
  const CoxeterSignature sig = CoxeterSignature::normalized(a, b, c);
  return triangle_is_hyperbolic(sig) && !(sig.a == 3 && sig.c <= 3);
}

std::optional<CoxeterElimination> coxeter_elimination(long long p, long long q, long long r,
                                                      const Slope& s) {
  if (!is_odd_integral(s)) return std::nullopt;
  const long long sv = s.num().convert_to<long long>();
  for (long long n : {p, q}) {
    if (sv - 2 * n == 1 || sv - 2 * n == -1) continue;
    const CoxeterQuotient quotient = coxeter_quotient(n, r, sv);
    if (!quotient.signature) continue;
    const CoxeterSignature& sig = *quotient.signature;
    if (edjvet_verdict(sig).status != Finiteness::kInfinite) continue;
    if (!coxeter_rule_applies(sig.a, sig.b, sig.c)) continue;
    return CoxeterElimination{n, sig.a, sig.b, sig.c};
  }
  return std::nullopt;
}

std::vector<Slope> finite_candidate_slopes(const PretzelKnot& k) {
  const KnotFamily f = family(k);
  if (f.tag != FamilyTag::kPQMinusR) {
    throw std::domain_error(k.str() + " is not a (p,q,-r) pretzel knot with r >= 4");
  }
  if (!hyperbolicity_condition(k)) {
    throw std::invalid_argument(k.str() + " fails 1/|p| + 1/|q| + 2/|r| < 1");
  }
  const BoundarySlopeSet nonint = nonintegral_slopes_pq_minus_r(f.p, f.q, f.r);
  std::vector<Slope> out;
  for (const Slope& u : adjacent_integers(nonint.slopes)) {
    if (is_odd_integral(u) && nearby_nonintegral_window(u.num(), nonint)) out.push_back(u);
  }
  return out;
}

Certificate classify_finite(const PretzelKnot& k) {
  require_knot(k);
  Builder b(k, Question::kFinite);
  if (knot_level_prefix(b, "finite")) return b.finish();
  const KnotFamily f = family(k);

  if (f.tag == FamilyTag::kMinus2PQ) {
    if (f.p == 3) {
      known_results(b, Question::kFinite, *known_finite(k));
      return b.finish();
    }
    const Verdict cyclic = classify_cyclic(k).verdict();
    RuleInputs in = knot_input(k);
    in.emplace_back("cyclic_verdict", to_string(cyclic));
    b.add("FINITE_OPEN", std::move(in), "finite fillings not decided");
    if (cyclic == Verdict::kNone) b.annotate("not cyclic: any non-trivial finite filling is non-cyclic");
    return b.finish();
  }

  // (p,q,-r), r >= 4
  if (!hyperbolicity_condition(k)) {
    if (residual_case_analysis_covers(k)) {
      b.add("RESIDUAL_KNOT", knot_input(k),
            "1/|p| + 1/|q| + 2/|r| >= 1; no non-trivial finite filling by case analysis");
    } else {
      b.add("UNCOVERED", knot_input(k), "hyperbolicity condition fails");
    }
    return b.finish();
  }
  b.add("FINITE_INTEGRAL_ONLY", knot_input(k), "a non-trivial finite slope is integral");

  const Slope t = toroidal_slope(k);
  if (f.p > 2 * f.r + 1) {
    const Rational gap = large_index_gap(f.p, f.q, f.r);
    RuleInputs in = knot_input(k);
    in.emplace_back("gap", to_string(gap));
    b.add("LARGE_INDEX_GAP", std::move(in),
          "non-integral slopes at least " + to_string(gap) + " from " + t.str());
  } else if (f.p <= f.r - 5) {
    const Rational gap = small_index_gap(f.p, f.q, f.r);
    RuleInputs in = knot_input(k);
    in.emplace_back("gap", to_string(gap));
    b.add("SMALL_INDEX_GAP", std::move(in),
          "non-integral slope " + to_string(gap) + " from " + t.str());
  }

  const BoundarySlopeSet nonint = nonintegral_slopes_pq_minus_r(f.p, f.q, f.r);
  std::vector<Slope> cands;
  if (nonint.completeness != Completeness::kCandidateOnly) {
    if (nonint.slopes.empty()) {
      b.add("FINITE_NO_NONINTEGRAL", knot_input(k), "no non-integral boundary slope");
      return b.finish();
    }
    cands = adjacent_integers(nonint.slopes);
    RuleInputs in = knot_input(k);
    in.emplace_back("nonintegral", join(nonint.slopes));
    in.emplace_back("candidates", join(cands));
    b.add("FINITE_PROXIMITY", std::move(in), "candidates " + join(cands));
  } else {
    cands = toroidal_window(t);
    RuleInputs in = knot_input(k);
    in.emplace_back("toroidal", t.str());
    in.emplace_back("candidates", join(cands));
    b.add("FINITE_TOROIDAL_WINDOW", std::move(in),
          "boundary slopes not available; candidates within 10 of " + t.str());
  }

  std::vector<Slope> pending;
  for (const Slope& u : cands) {
    const Integer d = distance(u, t);
    if (has_even_numerator(u)) {
      b.decide(u, "EVEN_FILLING_INFINITE", {{"slope", u.str()}}, "even filling is infinite");
    } else if (d > 10) {
      b.decide(u, "EXCEPTIONAL_DISTANCE",
               {{"slope", u.str()}, {"toroidal", t.str()}, {"distance", d.str()}},
               "distance " + d.str() + " to toroidal slope " + t.str() + " exceeds 10");
    } else if (const auto e = coxeter_elimination(f.p, f.q, f.r, u)) {
      const std::string sig = CoxeterSignature{e->a, e->b, e->c}.str();
      b.decide(u, "COXETER_QUOTIENT_INFINITE",
               {{"slope", u.str()}, {"index", std::to_string(e->index)}, {"signature", sig}},
               "quotient " + sig + " is infinite");
    } else {
      pending.push_back(u);
    }
  }

  if (pending.size() >= 2) {
    const UniqueOddDeduction d = unique_odd_finite_slope(pending[0], pending[1]);
    b.add("UNIQUE_ODD",
          {{"first", d.first.str()}, {"second", d.second.str()}, {"even_point", d.chosen.str()}},
          "at most one of " + d.first.str() + ", " + d.second.str() + " is finite");
  }
  for (const Slope& u : pending) {
    if (residual_case_analysis_covers(k)) {
      b.decide(u, "RESIDUAL_CASE", {{"slope", u.str()}}, "excluded by case analysis");
    } else {
      b.decide(u, "UNCOVERED", {{"slope", u.str()}}, "not decided");
    }
  }
  return b.finish();
}

Certificate classify(const PretzelKnot& k, Question q) {
  return q == Question::kCyclic ? classify_cyclic(k) : classify_finite(k);
}

namespace {

long long to_ll(const std::string& s) {
  std::size_t used = 0;
  const long long v = std::stoll(s, &used);
  if (used != s.size()) throw std::invalid_argument("not an integer: " + s);
  return v;
}

// Premise of one rule application, evaluated from scratch. Returns an empty
// string when it holds, else the reason it fails.
std::string check_premise(const Certificate& c, const RuleApplication& r) {
  const PretzelKnot& k = c.knot;
  const KnotFamily f = family(k);
  const auto has = [&](const std::string& key) {
    return std::any_of(r.inputs.begin(), r.inputs.end(),
                       [&](const auto& kv) { return kv.first == key; });
  };
  if (has("knot") && r.input("knot") != k.str()) return "knot input does not match";

  const std::string& id = r.id;
  if (id == "TORUS_KNOT") return torus_status(k) == TorusStatus::kTorus ? "" : "not torus";
  if (id == "UNCLASSIFIED_INDEX") {
    return torus_status(k) == TorusStatus::kUnclassified ? "" : "knot is classified";
  }
  if (id == "NON_PRETZEL_FAMILY") {
    return f.tag == FamilyTag::kOther && torus_status(k) == TorusStatus::kNotTorus
               ? ""
               : "knot is in a candidate family";
  }
  if (id == "NO_Z_FILLING") {
    if (f.tag != FamilyTag::kPQMinusR) return "not (p,q,-r) with r >= 4";
    const Verdict v = classify_finite(k).verdict();
    if (v != Verdict::kNone || r.input("finite_verdict") != to_string(v)) {
      return "finite classification is " + to_string(v);
    }
    return "";
  }
  if (id == "KNOWN_RESULTS") {
    const Question q = parse_question(r.input("question"));
    if (q != c.question) return "question mismatch";
    const auto known = q == Question::kCyclic ? known_cyclic(k) : known_finite(k);
    if (!known) return "knot not in the table";
    return known->slopes == split_slopes(r.input("slopes")) ? "" : "table slopes differ";
  }
  if (id == "CYCLIC_NO_NONINTEGRAL") {
    if (f.tag != FamilyTag::kMinus2PQ) return "not (-2,p,q)";
    return nonintegral_slopes_minus2_pq(f.p, f.q).slopes.empty() ? "" : "has non-integral slopes";
  }
  if (id == "CYCLIC_PROXIMITY" || id == "FINITE_PROXIMITY") {
    BoundarySlopeSet set;
    if (id == "CYCLIC_PROXIMITY" && f.tag == FamilyTag::kMinus2PQ) {
      set = nonintegral_slopes_minus2_pq(f.p, f.q);
    } else if (id == "FINITE_PROXIMITY" && f.tag == FamilyTag::kPQMinusR) {
      set = nonintegral_slopes_pq_minus_r(f.p, f.q, f.r);
      if (set.completeness == Completeness::kCandidateOnly) return "slope set incomplete";
    } else {
      return "wrong family";
    }
    if (join(set.slopes) != r.input("nonintegral")) return "non-integral slopes differ";
    return join(adjacent_integers(set.slopes)) == r.input("candidates") ? ""
                                                                        : "candidates differ";
  }
  if (id == "FINITE_TOROIDAL_WINDOW") {
    if (f.tag != FamilyTag::kPQMinusR) return "wrong family";
    if (nonintegral_slopes_pq_minus_r(f.p, f.q, f.r).completeness != Completeness::kCandidateOnly) {
      return "slope set is complete";
    }
    const Slope t = toroidal_slope(k);
    if (r.input("toroidal") != t.str()) return "toroidal slope differs";
    return join(toroidal_window(t)) == r.input("candidates") ? "" : "candidates differ";
  }
  if (id == "LENS_TOROIDAL_DISTANCE" || id == "EXCEPTIONAL_DISTANCE") {
    const Slope t = toroidal_slope(k);
    if (parse_slope(r.input("toroidal")) != t) return "toroidal slope differs";
    const Integer d = distance(parse_slope(r.input("slope")), t);
    if (d.str() != r.input("distance")) return "distance differs";
    const int bound = id == "LENS_TOROIDAL_DISTANCE" ? 5 : 10;
    return d > bound ? "" : "distance within bound";
  }
  if (id == "HYPERBOLIC_FILLING") {
    return known_hyperbolic_filling(k, parse_slope(r.input("slope"))) ? "" : "no recorded fact";
  }
  if (id == "NORM_INFEASIBLE") {
    const long long q = to_ll(r.input("q"));
    if (f.tag != FamilyTag::kMinus2PQ || f.p != 5 || f.q != q) return "not (-2,5,q)";
    if (parse_slope(r.input("slope")) != Slope(2 * q + 5)) return "slope is not 2q+5";
    return norm_contradiction(q) ? "" : "system feasible or witness rejected";
  }
  if (id == "FINITE_OPEN") {
    if (f.tag != FamilyTag::kMinus2PQ || f.p < 5) return "not (-2,p,q) with p >= 5";
    return r.input("cyclic_verdict") == to_string(classify_cyclic(k).verdict())
               ? ""
               : "cyclic verdict differs";
  }
  if (id == "RESIDUAL_KNOT") {
    if (f.tag != FamilyTag::kPQMinusR || hyperbolicity_condition(k)) {
      return "hyperbolicity condition holds";
    }
    return residual_case_analysis_covers(k) ? "" : "outside the residual table";
  }
  if (id == "FINITE_INTEGRAL_ONLY") {
    return f.tag == FamilyTag::kPQMinusR && hyperbolicity_condition(k) ? ""
                                                                        : "condition fails";
  }
  if (id == "FINITE_NO_NONINTEGRAL") {
    if (f.tag != FamilyTag::kPQMinusR) return "wrong family";
    const BoundarySlopeSet set = nonintegral_slopes_pq_minus_r(f.p, f.q, f.r);
    return set.completeness != Completeness::kCandidateOnly && set.slopes.empty()
               ? ""
               : "non-integral slopes present or unknown";
  }
  if (id == "LARGE_INDEX_GAP") {
    if (f.tag != FamilyTag::kPQMinusR || f.p <= 2 * f.r + 1) return "p <= 2r+1";
    const Rational gap = large_index_gap(f.p, f.q, f.r);
    if (to_string(gap) != r.input("gap")) return "gap differs";
    return gap >= 11 ? "" : "gap below 11";
  }
  if (id == "SMALL_INDEX_GAP") {
    if (f.tag != FamilyTag::kPQMinusR || f.p > f.r - 5) return "p > r-5";
    const Rational gap = small_index_gap(f.p, f.q, f.r);
    if (to_string(gap) != r.input("gap")) return "gap differs";
    return gap > 10 ? "" : "gap at most 10";
  }
  if (id == "EVEN_FILLING_INFINITE") {
    if (f.tag != FamilyTag::kPQMinusR || !hyperbolicity_condition(k)) return "condition fails";
    return has_even_numerator(parse_slope(r.input("slope"))) ? "" : "odd numerator";
  }
  if (id == "COXETER_QUOTIENT_INFINITE") {
    if (f.tag != FamilyTag::kPQMinusR) return "wrong family";
    const long long n = to_ll(r.input("index"));
    if (n != f.p && n != f.q) return "index is not p or q";
    const Slope s = parse_slope(r.input("slope"));
    if (!is_odd_integral(s)) return "slope not odd integral";
    const auto quotient = coxeter_quotient(n, f.r, s.num().convert_to<long long>());
    if (!quotient.signature || quotient.signature->str() != r.input("signature")) {
      return "signature differs";
    }
    const CoxeterSignature& sig = *quotient.signature;
    if (edjvet_verdict(sig).status != Finiteness::kInfinite) return "signature not infinite";
    return coxeter_rule_applies(sig.a, sig.b, sig.c) ? "" : "outside the rule's range";
  }
  if (id == "RESIDUAL_CASE") {
    return residual_case_analysis_covers(k) ? "" : "outside the residual table";
  }
  if (id == "UNIQUE_ODD") {
    const UniqueOddDeduction d =
        unique_odd_finite_slope(parse_slope(r.input("first")), parse_slope(r.input("second")));
    return d.chosen.str() == r.input("even_point") ? "" : "even point differs";
  }
  if (id == "UNCOVERED") return "";
  return "unknown rule";
}

}  // namespace

std::vector<ReplayFailure> replay(const Certificate& c) {
  std::vector<ReplayFailure> out;
  for (std::size_t i = 0; i < c.rules.size(); ++i) {
    const RuleApplication& r = c.rules[i];
    std::string reason;
    try {
      reason = check_premise(c, r);
    } catch (const std::exception& e) {
      reason = std::string("premise threw: ") + e.what();
    }
    if (!reason.empty()) out.push_back({i, r.id, reason});
  }
  const bool finite_family =
      c.question == Question::kFinite && family(c.knot).tag == FamilyTag::kPQMinusR;
  for (const CandidateSlope& cand : c.candidates) {
    if (cand.step >= c.rules.size()) {
      out.push_back({cand.step, "", "candidate " + cand.slope.str() + " references no rule"});
      continue;
    }
    const RuleApplication& r = c.rules[cand.step];
    const RuleEffect effect = rule_info(r.id).effect;
    std::string reason;
    switch (cand.status) {
      case SlopeStatus::kRealizedKnown:
        if (r.id != "KNOWN_RESULTS") reason = "realized status outside the known-results table";
        break;
      case SlopeStatus::kEliminated:
        if (effect != RuleEffect::kSlope || r.id == "UNCOVERED") {
          reason = "eliminated by a rule that decides no slope";
        } else if (parse_slope(r.input("slope")) != cand.slope) {
          reason = "rule was applied to a different slope";
        } else if (finite_family && has_even_numerator(cand.slope) &&
                   r.id != "EVEN_FILLING_INFINITE") {
          reason = "even slope eliminated outside the parity rule";
        }
        break;
      case SlopeStatus::kUnresolved:
        if (r.id != "UNCOVERED") reason = "unresolved slope must reference UNCOVERED";
        break;
    }
    if (!reason.empty()) out.push_back({cand.step, r.id, cand.slope.str() + ": " + reason});
  }
  return out;
}

}  // namespace pretzel
