#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "pretzel/boundary_slopes.hpp"
#include "pretzel/certificate_io.hpp"
#include "pretzel/classifier.hpp"
#include "pretzel/coxeter.hpp"
#include "pretzel/facts.hpp"

using namespace pretzel;

namespace {

const CandidateSlope* find(const Certificate& c, const Slope& s) {
  for (const auto& cand : c.candidates)
    if (cand.slope == s) return &cand;
  return nullptr;
}

std::string rule_of(const Certificate& c, long long n) {
  const CandidateSlope* cand = find(c, Slope(n));
  return cand ? c.rules.at(cand->step).id : std::string("<absent>");
}

bool has_rule(const Certificate& c, const std::string& id) {
  return std::any_of(c.rules.begin(), c.rules.end(), [&](const auto& r) { return r.id == id; });
}

std::vector<PretzelKnot> finite_box() {
  std::set<PretzelKnot> out;
  for (long long p = 3; p <= 15; p += 2)
    for (long long q = p; q <= 15; q += 2)
      for (long long r = 4; r <= 16; r += 2) out.insert(canonicalize(p, q, -r));
  return {out.begin(), out.end()};
}

std::vector<PretzelKnot> cyclic_box() {
  std::set<PretzelKnot> out;
  for (long long p = -13; p <= 13; ++p)
    for (long long q = -13; q <= 13; ++q)
      for (long long r = -13; r <= 13; ++r) {
        if (!p || !q || !r) continue;
        const PretzelKnot k = canonicalize(p, q, r);
        if (k.is_knot()) out.insert(k);
      }
  return {out.begin(), out.end()};
}

// Integers whose distance to a non-integral slope c/d is below one.
std::set<Slope> adjacent(const std::vector<Slope>& nonintegral) {
  std::set<Slope> out;
  for (const Slope& s : nonintegral) {
    Integer f = s.num() / s.den();
    if (s.num() < 0) f -= 1;
    out.insert(Slope(f, 1));
    out.insert(Slope(f + 1, 1));
  }
  return out;
}

}  // namespace

TEST_CASE("known cyclic and finite fillings of (-2,3,q)") {
  const auto c = classify_cyclic(canonicalize(-2, 3, 7));
  CHECK(c.verdict() == Verdict::kRealized);
  CHECK(c.realized() == std::vector<Slope>{Slope(18), Slope(19)});
  const auto f = classify_finite(canonicalize(-2, 3, 7));
  CHECK(f.realized() == std::vector<Slope>{Slope(17), Slope(18), Slope(19)});
  const auto g = classify_finite(canonicalize(3, 9, -2));
  CHECK(g.realized() == std::vector<Slope>{Slope(22), Slope(23)});
  CHECK(classify_cyclic(canonicalize(-2, 3, 9)).verdict() == Verdict::kNone);
  CHECK(classify_finite(canonicalize(-2, 3, 11)).verdict() == Verdict::kNone);
  CHECK(has_rule(c, "KNOWN_RESULTS"));
}

TEST_CASE("cyclic slopes of (-2,p,q) with p >= 5") {
  const auto a = classify_cyclic(canonicalize(-2, 5, 9));
  CHECK(a.verdict() == Verdict::kNone);
  CHECK(a.candidates.size() == 2);
  CHECK(rule_of(a, 22) == "LENS_TOROIDAL_DISTANCE");
  CHECK(a.rules.at(find(a, Slope(22))->step).input("distance") == "6");
  CHECK(rule_of(a, 23) == "NORM_INFEASIBLE");

  const auto b = classify_cyclic(canonicalize(-2, 7, 11));
  CHECK(b.verdict() == Verdict::kNone);
  for (long long n : {18, 19, 26, 27}) CHECK(rule_of(b, n) == "LENS_TOROIDAL_DISTANCE");
  CHECK(b.candidates.size() == 4);

  const auto c = classify_cyclic(canonicalize(-2, 5, 7));
  CHECK(rule_of(c, 19) == "HYPERBOLIC_FILLING");
  CHECK(c.verdict() == Verdict::kNone);

  const auto d = classify_cyclic(canonicalize(-2, 5, 5));
  CHECK(has_rule(d, "CYCLIC_NO_NONINTEGRAL"));
  CHECK(d.candidates.empty());
  CHECK(d.verdict() == Verdict::kNone);
}

TEST_CASE("knot-level rules") {
  CHECK(classify_cyclic(canonicalize(-2, 3, 5)).verdict() == Verdict::kTorus);
  CHECK(classify_finite(canonicalize(-2, 3, 3)).verdict() == Verdict::kTorus);
  const auto u = classify_cyclic(canonicalize(-1, 3, 5));
  CHECK(u.verdict() == Verdict::kUnresolved);
  CHECK(u.rules.front().id == "UNCLASSIFIED_INDEX");
  const auto o = classify_cyclic(canonicalize(3, 5, 7));
  CHECK(o.verdict() == Verdict::kNone);
  CHECK(o.rules.front().id == "NON_PRETZEL_FAMILY");
  CHECK(classify_cyclic(canonicalize(-4, 3, 5)).rules.front().id == "NO_Z_FILLING");
  CHECK_THROWS_AS(classify_cyclic(canonicalize(-4, 2, 3)), std::domain_error);
  CHECK_THROWS_AS(classify_finite(canonicalize(2, 4, 7)), std::domain_error);
  const auto open = classify_finite(canonicalize(-2, 5, 9));
  CHECK(open.verdict() == Verdict::kUnresolved);
  CHECK(open.rules.front().id == "FINITE_OPEN");
  CHECK(open.annotations.size() >= 1);
}

TEST_CASE("finite slopes of (p,q,-r) knots") {
  const auto a = classify_finite(canonicalize(9, 9, -4));
  CHECK(a.verdict() == Verdict::kNone);
  CHECK(rule_of(a, 30) == "EVEN_FILLING_INFINITE");
  CHECK(rule_of(a, 31) == "COXETER_QUOTIENT_INFINITE");
  CHECK(a.rules.at(find(a, Slope(31))->step).input("signature") == "(2,9,13;2)");
  CHECK(has_rule(a, "FINITE_PROXIMITY"));
  CHECK_FALSE(has_rule(a, "LARGE_INDEX_GAP"));  // p = 2r+1 is outside the gap range
  CHECK(has_rule(classify_finite(canonicalize(11, 11, -4)), "LARGE_INDEX_GAP"));

  const auto b = classify_finite(canonicalize(3, 9, -24));
  CHECK(has_rule(b, "SMALL_INDEX_GAP"));
  CHECK(rule_of(b, 66) == "EVEN_FILLING_INFINITE");
  CHECK(rule_of(b, 67) == "EXCEPTIONAL_DISTANCE");
  CHECK(b.rules.at(find(b, Slope(67))->step).input("distance") == "43");

  const auto c = classify_finite(canonicalize(3, 3, -4));
  CHECK(c.verdict() == Verdict::kNone);
  CHECK(has_rule(c, "RESIDUAL_KNOT"));

  CHECK(finite_candidate_slopes(canonicalize(9, 9, -4)) == std::vector<Slope>{Slope(31)});
  CHECK_THROWS_AS(finite_candidate_slopes(canonicalize(3, 3, -4)), std::invalid_argument);
  CHECK_THROWS_AS(finite_candidate_slopes(canonicalize(-2, 3, 7)), std::domain_error);
}

TEST_CASE("coxeter elimination") {
  const auto e = coxeter_elimination(9, 9, 4, Slope(31));
  REQUIRE(e.has_value());
  CHECK((e->a == 9 && e->b == 13 && e->c == 2));
  // |s - 2n| = 1 for both indices gives no signature
  CHECK_FALSE(coxeter_elimination(5, 5, 4, Slope(11)).has_value());
  CHECK_FALSE(coxeter_elimination(9, 9, 4, Slope(30)).has_value());
  CHECK_FALSE(coxeter_rule_applies(3, 7, 3));
  CHECK_FALSE(coxeter_rule_applies(3, 6, 9));
  CHECK(coxeter_rule_applies(3, 7, 9));
  CHECK(coxeter_rule_applies(9, 13, 2));
}

TEST_CASE("property: every finite certificate in the box is NONE and replays") {
  for (const PretzelKnot& k : finite_box()) {
    CAPTURE(k.str());
    const auto c = classify_finite(k);
    CHECK(c.verdict() == Verdict::kNone);
    CHECK(replay(c).empty());
    for (const auto& cand : c.candidates) {
      const std::string& id = c.rules.at(cand.step).id;
      // parity: even slopes fall to the even-filling bound and nothing else does
      CHECK((id == "EVEN_FILLING_INFINITE") == has_even_numerator(cand.slope));
      if (id == "EXCEPTIONAL_DISTANCE") CHECK(distance(cand.slope, toroidal_slope(k)) > 10);
      if (id == "COXETER_QUOTIENT_INFINITE") {
        const auto& rule = c.rules.at(cand.step);
        const long long n = std::stoll(rule.input("index"));
        const long long e = std::llabs(static_cast<long long>(cand.slope.num()) - 2 * n);
        const auto f = family(k);
        const auto sig = CoxeterSignature::normalized(n, e, f.r / 2);
        CHECK(rule.input("signature") == sig.str());
        CHECK(edjvet_verdict(sig).status == Finiteness::kInfinite);
        CHECK(triangle_is_hyperbolic(sig));
      }
    }
  }
}

TEST_CASE("property: finite candidates include every integer next to a non-integral slope") {
  int checked = 0;
  for (const PretzelKnot& k : finite_box()) {
    const auto f = family(k);
    if (!hyperbolicity_condition(k)) continue;
    const auto set = nonintegral_slopes_pq_minus_r(f.p, f.q, f.r);
    if (set.completeness == Completeness::kCandidateOnly) continue;
    const auto c = classify_finite(k);
    std::set<Slope> cands;
    for (const auto& cand : c.candidates) cands.insert(cand.slope);
    for (const Slope& s : adjacent(set.slopes)) CHECK(cands.count(s) == 1);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("property: cyclic certificates replay and only (-2,3,7) is realized") {
  std::map<Verdict, int> tally;
  for (const PretzelKnot& k : cyclic_box()) {
    const auto c = classify_cyclic(k);
    CAPTURE(k.str());
    CHECK(replay(c).empty());
    ++tally[c.verdict()];
    if (c.verdict() == Verdict::kRealized) CHECK(k == canonicalize(-2, 3, 7));
    if (c.verdict() == Verdict::kUnresolved) {
      const auto& idx = k.indices();
      CHECK(std::any_of(idx.begin(), idx.end(), [](long long v) { return std::llabs(v) == 1; }));
    }
    for (const auto& cand : c.candidates) {
      const auto& rule = c.rules.at(cand.step);
      if (rule.id == "LENS_TOROIDAL_DISTANCE") CHECK(distance(cand.slope, toroidal_slope(k)) > 5);
    }
  }
  CHECK(tally[Verdict::kRealized] == 1);
  CHECK(tally[Verdict::kNone] > 500);
}

TEST_CASE("replay rejects tampered certificates") {
  const auto good = classify_cyclic(canonicalize(-2, 5, 9));
  REQUIRE(replay(good).empty());

  auto bad_distance = good;
  for (auto& r : bad_distance.rules)
    for (auto& [k, v] : r.inputs)
      if (k == "distance") v = "2";
  CHECK_FALSE(replay(bad_distance).empty());

  auto bad_status = good;
  bad_status.candidates.front().status = SlopeStatus::kRealizedKnown;
  CHECK_FALSE(replay(bad_status).empty());

  auto bad_step = good;
  bad_step.candidates.back().step = 0;
  CHECK_FALSE(replay(bad_step).empty());

  auto bad_rule = good;
  bad_rule.rules.back().id = "HYPERBOLIC_FILLING";
  CHECK_FALSE(replay(bad_rule).empty());

  auto finite = classify_finite(canonicalize(9, 9, -4));
  REQUIRE(replay(finite).empty());
  for (auto& r : finite.rules)
    for (auto& [k, v] : r.inputs)
      if (k == "signature") v = "(2,3,7;2)";
  CHECK_FALSE(replay(finite).empty());

  Certificate empty{canonicalize(3, 5, 7), Question::kCyclic, {}, {}, {}};
  CHECK(empty.verdict() == Verdict::kUnresolved);
}

TEST_CASE("JSON round trip and determinism") {
  for (const PretzelKnot& k : finite_box()) {
    const auto c = classify_finite(k);
    const std::string js = emit_certificate(c, CertificateFormat::kJson);
    CHECK(js.find('\n') == std::string::npos);
    const auto back = parse_certificate_json(js);
    CHECK(back == c);
    CHECK(emit_certificate(back, CertificateFormat::kJson) == js);
    CHECK(emit_certificate(classify_finite(k), CertificateFormat::kJson) == js);
  }
  for (auto k : {canonicalize(-2, 3, 7), canonicalize(-2, 5, 9), canonicalize(-1, 3, 5)}) {
    const auto c = classify_cyclic(k);
    CHECK(parse_certificate_json(emit_certificate(c, CertificateFormat::kJson)) == c);
  }
  const std::string js = emit_certificate(classify_cyclic(canonicalize(-2, 3, 7)), CertificateFormat::kJson);
  CHECK(js.rfind(R"({"pretzel":[-2,3,7],"question":"CYCLIC")", 0) == 0);
  CHECK(js.find(R"("realized":[18,19])") != std::string::npos);
}

TEST_CASE("JSON parser rejects inconsistent input") {
  const std::string js = emit_certificate(classify_cyclic(canonicalize(-2, 3, 7)), CertificateFormat::kJson);
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string s = js;
    s.replace(s.find(from), from.size(), to);
    return s;
  };
  CHECK_THROWS_AS(parse_certificate_json(replace("\"REALIZED\"", "\"NONE\"")), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate_json(replace("KNOWN_RESULTS", "MADE_UP")), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate_json(replace("[-2,3,7]", "[7,3,-2]")), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate_json("{"), std::invalid_argument);
  CHECK_THROWS_AS(parse_certificate_json("[]"), std::invalid_argument);
}

TEST_CASE("text reports") {
  const auto c = classify_cyclic(canonicalize(-2, 5, 9));
  const std::string plain = emit_certificate(c, CertificateFormat::kText);
  const std::string cited = emit_certificate(c, CertificateFormat::kText, true);
  CHECK(plain.find("NORM_INFEASIBLE") != std::string::npos);
  CHECK(cited.size() > plain.size());
  CHECK(cited.find(std::string(rule_info("LENS_TOROIDAL_DISTANCE").citation)) != std::string::npos);
  CHECK(parse_format("json") == CertificateFormat::kJson);
  CHECK_THROWS_AS(parse_format("xml"), std::invalid_argument);
}

TEST_CASE("rule catalog") {
  std::set<std::string_view> ids;
  for (const auto& r : rule_catalog()) {
    CHECK(ids.insert(r.id).second);
    CHECK_FALSE(r.citation.empty());
    CHECK_FALSE(r.anchor.empty());
  }
  CHECK(ids.size() == 24);
  CHECK(rule_info("UNCOVERED").effect == RuleEffect::kUnresolved);
  CHECK_THROWS_AS(rule_info("NOPE"), std::invalid_argument);
  // every id emitted anywhere in the boxes is catalogued
  for (const auto& k : finite_box())
    for (const auto& r : classify_finite(k).rules) CHECK(ids.count(r.id) == 1);
}

TEST_CASE("imported facts") {
  const auto kc = known_cyclic(canonicalize(-2, 3, 7));
  REQUIRE(kc.has_value());
  CHECK(kc->slopes == std::vector<Slope>{Slope(18), Slope(19)});
  CHECK(known_finite(canonicalize(-2, 3, 9))->slopes == std::vector<Slope>{Slope(22), Slope(23)});
  CHECK(known_finite(canonicalize(-2, 3, 13))->slopes.empty());
  CHECK_FALSE(known_cyclic(canonicalize(-2, 5, 7)).has_value());
  CHECK(known_hyperbolic_filling(canonicalize(-2, 5, 7), Slope(19)));
  CHECK_FALSE(known_hyperbolic_filling(canonicalize(-2, 5, 7), Slope(18)));
  CHECK(residual_case_analysis_covers(canonicalize(3, 5, -4)));
  CHECK(residual_case_analysis_covers(canonicalize(7, 99, -10)));
  CHECK_FALSE(residual_case_analysis_covers(canonicalize(9, 9, -4)));
  CHECK_FALSE(residual_case_analysis_covers(canonicalize(3, 5, -12)));
}

TEST_CASE("enum spellings") {
  CHECK(parse_question("cyclic") == Question::kCyclic);
  CHECK(parse_question("FINITE") == Question::kFinite);
  CHECK_THROWS_AS(parse_question("lens"), std::invalid_argument);
  for (auto s : {SlopeStatus::kRealizedKnown, SlopeStatus::kEliminated, SlopeStatus::kUnresolved})
    CHECK(parse_slope_status(to_string(s)) == s);
  CHECK(to_string(Verdict::kUnresolved) == "UNRESOLVED_BY_PAPER");
}
