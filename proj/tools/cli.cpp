#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>
#include <map>
#include <ostream>
#include <regex>
#include <set>
#include <sstream>

#include "pretzel/certificate_io.hpp"
#include "pretzel/coxeter.hpp"
#include "pretzel/cs_norm.hpp"
#include "pretzel/presentation.hpp"
#include "pretzel/todd_coxeter.hpp"
#include "pretzel/triangle_chars.hpp"

namespace pretzel::cli {

using ordered_json = nlohmann::ordered_json;

Range parse_range(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("malformed range '" + text + "'");
  const Range r{std::stoll(m[1]), std::stoll(m[2])};
  if (r.lo > r.hi) throw UsageError("empty range '" + text + "'");
  return r;
}

namespace {

std::array<long long, 3> parse_triple(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*,\s*(-?\d+)\s*,\s*(-?\d+)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("malformed pretzel '" + text + "'");
  std::array<long long, 3> t{std::stoll(m[1]), std::stoll(m[2]), std::stoll(m[3])};
  for (long long v : t) {
    if (v == 0) throw UsageError("pretzel indices must be nonzero: '" + text + "'");
  }
  return t;
}

Range default_range(Question q, char which) {
  if (q == Question::kCyclic) return {-25, 25};
  return which == 'r' ? Range{-16, -4} : Range{3, 15};
}

}  // namespace

Config parse_args(int argc, const char* const* argv) {
  CLI::App app{"Cyclic and finite Dehn filling classification for pretzel knots"};
  app.require_subcommand(1);
  Config cfg;

  std::string pretzel_text, question_text = "cyclic";
  auto* classify = app.add_subcommand("classify", "Classify one knot");
  classify->add_option("--pretzel", pretzel_text, "Indices p,q,r")->required();
  classify->add_option("--question", question_text, "cyclic or finite")
      ->check(CLI::IsMember({"cyclic", "finite"}));
  classify->add_flag("--json", cfg.json, "Emit the certificate as JSON");
  classify->add_flag("--cite", cfg.cite, "Append citations to text output");

  std::string p_text, q_text, r_text, sweep_question = "finite";
  auto* sweep = app.add_subcommand("sweep", "Classify every knot in a box of indices");
  sweep->add_option("--p-range", p_text, "a..b");
  sweep->add_option("--q-range", q_text, "a..b");
  sweep->add_option("--r-range", r_text, "a..b");
  sweep->add_option("--question", sweep_question, "cyclic or finite")
      ->check(CLI::IsMember({"cyclic", "finite"}));
  sweep->add_flag("--json", cfg.json, "One JSON certificate per line");

  auto* norm = app.add_subcommand("norm", "Norm system for a cyclic slope 2q+5 on (-2,5,q)");
  norm->add_option("--q", cfg.norm_q, "Odd q >= 9")->required();
  norm->add_flag("--json", cfg.json, "Emit JSON");

  std::vector<long long> chars_args;
  auto* chars = app.add_subcommand("chars", "Character counts of the triangle group");
  chars->add_option("triple", chars_args, "Triangle orders")->expected(3)->required();
  chars->add_flag("--json", cfg.json, "Emit JSON");

  auto* group = app.add_subcommand("group", "Group presentations");
  group->require_subcommand(1);
  std::vector<long long> present_args;
  long long fill = 0;
  auto* present = group->add_subcommand("present", "Knot group of the (p,q,-r) pretzel knot");
  present->add_option("indices", present_args, "p, q odd >= 3 and r even >= 4")
      ->expected(3)
      ->required();
  auto* fill_opt = present->add_option("--fill", fill, "Odd integral filling slope");
  present->add_flag("--coxeter", cfg.coxeter, "Also print the (2,a,b;c) quotient");
  present->add_flag("--json", cfg.json, "Emit JSON");

  std::vector<long long> coxeter_args;
  std::size_t max_cosets = 0;
  auto* coxeter = group->add_subcommand("coxeter", "Finiteness of (2,a,b;c)");
  coxeter->add_option("signature", coxeter_args, "Signature entries")->expected(3)->required();
  coxeter->add_flag("--enumerate", cfg.enumerate, "Run coset enumeration");
  auto* cap_opt = coxeter->add_option("--max-cosets", max_cosets, "Coset table cap");
  coxeter->add_flag("--json", cfg.json, "Emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  if (classify->parsed()) {
    cfg.command = Command::kClassify;
    cfg.input = parse_triple(pretzel_text);
    cfg.question = parse_question(question_text);
  } else if (sweep->parsed()) {
    cfg.command = Command::kSweep;
    cfg.question = parse_question(sweep_question);
    cfg.p_range = p_text.empty() ? default_range(cfg.question, 'p') : parse_range(p_text);
    cfg.q_range = q_text.empty() ? default_range(cfg.question, 'q') : parse_range(q_text);
    cfg.r_range = r_text.empty() ? default_range(cfg.question, 'r') : parse_range(r_text);
  } else if (norm->parsed()) {
    cfg.command = Command::kNorm;
  } else if (chars->parsed()) {
    cfg.command = Command::kChars;
    std::copy(chars_args.begin(), chars_args.end(), cfg.triple.begin());
    TriangleTriple(cfg.triple[0], cfg.triple[1], cfg.triple[2]);  // rejects entries below 2
  } else if (present->parsed()) {
    cfg.command = Command::kGroupPresent;
    std::copy(present_args.begin(), present_args.end(), cfg.triple.begin());
    if (fill_opt->count() > 0) cfg.fill = fill;
    if (cfg.coxeter && !cfg.fill) throw UsageError("--coxeter needs --fill");
  } else {
    cfg.command = Command::kGroupCoxeter;
    std::copy(coxeter_args.begin(), coxeter_args.end(), cfg.triple.begin());
    cfg.max_cosets = cap_opt->count() > 0 ? max_cosets : default_max_cosets();
    if (cfg.max_cosets == 0) throw UsageError("--max-cosets must be at least 1");
  }
  return cfg;
}

namespace {

int run_classify(const Config& cfg, std::ostream& out) {
  const PretzelKnot k = canonicalize(cfg.input[0], cfg.input[1], cfg.input[2]);
  const Certificate c = classify(k, cfg.question);
  if (cfg.json) {
    out << emit_certificate(c, CertificateFormat::kJson) << "\n";
    return kExitOk;
  }
  if (k.indices() != cfg.input) {
    out << "note: input (" << cfg.input[0] << "," << cfg.input[1] << "," << cfg.input[2]
        << ") is " << k.str() << " in canonical form\n";
  }
  out << emit_certificate(c, CertificateFormat::kText, cfg.cite);
  return kExitOk;
}

// Empty when the certificate passes every harness check.
std::string soundness_violation(const Certificate& c) {
  const auto failures = replay(c);
  if (!failures.empty()) {
    return "replay step " + std::to_string(failures.front().step) + " " + failures.front().id +
           ": " + failures.front().reason;
  }
  const Verdict v = c.verdict();
  if (c.question == Question::kFinite && family(c.knot).tag == FamilyTag::kPQMinusR &&
      v != Verdict::kNone) {
    return "(p,q,-r) knot with verdict " + to_string(v);
  }
  if (c.question == Question::kCyclic && v == Verdict::kRealized &&
      c.knot != canonicalize(-2, 3, 7)) {
    return "cyclic slopes realized outside (-2,3,7)";
  }
  return {};
}

int run_sweep(const Config& cfg, std::ostream& out, std::ostream& err) {
  std::set<PretzelKnot> knots;
  for (long long p = cfg.p_range.lo; p <= cfg.p_range.hi; ++p) {
    for (long long q = cfg.q_range.lo; q <= cfg.q_range.hi; ++q) {
      for (long long r = cfg.r_range.lo; r <= cfg.r_range.hi; ++r) {
        if (p == 0 || q == 0 || r == 0) continue;
        const PretzelKnot k = canonicalize(p, q, r);
        if (k.is_knot()) knots.insert(k);
      }
    }
  }
  std::map<Verdict, std::size_t> tally;
  std::size_t violations = 0;
  for (const PretzelKnot& k : knots) {
    const Certificate c = classify(k, cfg.question);
    ++tally[c.verdict()];
    if (cfg.json) {
      out << emit_certificate(c, CertificateFormat::kJson) << "\n";
    } else {
      out << k.str() << " " << to_string(cfg.question) << " " << to_string(c.verdict());
      const auto realized = c.realized();
      for (std::size_t i = 0; i < realized.size(); ++i) {
        out << (i ? "," : " ") << realized[i].str();
      }
      out << "\n";
    }
    if (const std::string why = soundness_violation(c); !why.empty()) {
      ++violations;
      err << "violation " << k.str() << ": " << why << "\n";
    }
  }
  err << "swept " << knots.size() << " knots:";
  for (const auto& [v, n] : tally) err << " " << to_string(v) << "=" << n;
  err << "; violations=" << violations << "\n";
  return violations == 0 ? kExitOk : kExitInternal;
}

std::string witness_str(const std::vector<Rational>& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + to_string(w[i]);
  return s;
}

int run_norm(const Config& cfg, std::ostream& out) {
  const PairwiseInfeasibility result = cyclic_infeasibility_minus2_5_q(cfg.norm_q);
  const NormSystem& sys = result.system;
  bool verified = true;
  for (const FeasibilityVerdict& v : result.pairs) verified = verified && verify(sys, v);
  const std::string verdict = result.all_infeasible() ? "INFEASIBLE" : "FEASIBLE";

  if (cfg.json) {
    ordered_json j;
    j["q"] = cfg.norm_q;
    j["boundary"] = ordered_json::array();
    for (const Slope& s : sys.boundary()) j["boundary"].push_back(s.str());
    j["constraints"] = ordered_json::array();
    for (const NormConstraint& c : sys.constraints()) {
      j["constraints"].push_back({{"gamma", c.gamma.str()},
                                  {"kind", to_string(c.relation)},
                                  {"rhs", c.rhs_str()},
                                  {"citation", c.citation}});
    }
    j["verdict"] = verdict;
    j["verified"] = verified;
    j["pairs"] = ordered_json::array();
    for (const FeasibilityVerdict& v : result.pairs) {
      ordered_json p;
      p["i"] = v.pair_tested->first + 1;
      p["j"] = v.pair_tested->second + 1;
      p["feasible"] = v.feasible;
      ordered_json w = ordered_json::array();
      for (const Rational& x : v.feasible ? v.sample : v.witness) w.push_back(to_string(x));
      p[v.feasible ? "sample" : "witness"] = std::move(w);
      j["pairs"].push_back(std::move(p));
    }
    out << j.dump() << "\n";
    return kExitOk;
  }

  out << "(-2,5," << cfg.norm_q << "), hypothetical cyclic slope " << 2 * cfg.norm_q + 5 << "\n";
  out << "boundary slopes:";
  for (const Slope& s : sys.boundary()) out << " " << s.str();
  out << "\n";
  for (const NormConstraint& c : sys.constraints()) {
    out << "  ||" << c.gamma.str() << "|| " << to_string(c.relation) << " " << c.rhs_str()
        << "    coefficients";
    for (const Integer& x : c.coeffs) out << " " << x;
    out << "\n";
  }
  for (const FeasibilityVerdict& v : result.pairs) {
    out << "  a" << v.pair_tested->first + 1 << ",a" << v.pair_tested->second + 1 << " >= 1: "
        << (v.feasible ? "feasible, sample " + witness_str(v.sample)
                       : "infeasible, witness " + witness_str(v.witness))
        << "\n";
  }
  out << "verdict " << verdict << (verified ? " (verified)" : " (verification FAILED)") << "\n";
  return verified ? kExitOk : kExitInternal;
}

int run_chars(const Config& cfg, std::ostream& out) {
  const TriangleTriple t(cfg.triple[0], cfg.triple[1], cfg.triple[2]);
  const auto total = total_char_count(t);
  const auto reducible = reducible_char_count(t);
  const auto irreducible = irreducible_char_count(t);
  if (cfg.json) {
    ordered_json j;
    j["triangle"] = {t.p, t.q, t.r};
    j["total"] = total;
    j["reducible"] = reducible;
    j["irreducible"] = irreducible;
    out << j.dump() << "\n";
  } else {
    out << "Delta(" << t.p << "," << t.q << "," << t.r << "): total " << total << ", reducible "
        << reducible << ", irreducible " << irreducible << "\n";
  }
  return kExitOk;
}

int run_present(const Config& cfg, std::ostream& out) {
  const long long p = cfg.triple[0];
  const long long q = cfg.triple[1];
  const long long r = std::llabs(cfg.triple[2]);
  const GroupPresentation g =
      cfg.fill ? filled_presentation(p, q, r, *cfg.fill) : wirtinger_presentation(p, q, r);
  const AbelianInvariants ab = abelianization(g);
  ordered_json j;
  j["knot"] = {p, q, -r};
  j["presentation"] = g.str();
  j["longitude"] = to_string(longitude_word(p, q, r), g.generators);
  j["abelianization"] = ab.str();
  if (cfg.fill) j["fill"] = *cfg.fill;

  std::optional<CoxeterQuotient> quotient;
  if (cfg.coxeter) {
    quotient = coxeter_quotient(p, r, *cfg.fill);
    j["intermediate"] = quotient->intermediate.str();
    j["two_generator"] = quotient->two_generator.str();
    if (quotient->signature) {
      const FinitenessVerdict v = edjvet_verdict(*quotient->signature);
      j["signature"] = quotient->signature->str();
      j["verdict"] = to_string(v.status);
      j["clause"] = v.clause;
    } else {
      j["signature"] = nullptr;
    }
  }
  if (cfg.json) {
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << "knot (" << p << "," << q << "," << -r << ")"
      << (cfg.fill ? ", filled along " + std::to_string(*cfg.fill) : std::string()) << "\n";
  out << "  " << g.str() << "\n";
  out << "  longitude " << j["longitude"].get<std::string>() << "\n";
  out << "  abelianization " << ab.str() << "\n";
  if (quotient) {
    out << "  quotient " << quotient->intermediate.str() << "\n";
    out << "         = " << quotient->two_generator.str() << "\n";
    if (quotient->signature) {
      out << "  signature " << quotient->signature->str() << " " << j["verdict"].get<std::string>()
          << (quotient->signature && !j["clause"].get<std::string>().empty()
                  ? " clause " + j["clause"].get<std::string>()
                  : std::string())
          << "\n";
    } else {
      out << "  signature none (|s-2p| = 1, quotient is trivial)\n";
    }
  }
  return kExitOk;
}

int run_coxeter(const Config& cfg, std::ostream& out) {
  const CoxeterSignature sig =
      CoxeterSignature::normalized(cfg.triple[0], cfg.triple[1], cfg.triple[2]);
  const FinitenessVerdict v = edjvet_verdict(sig);
  std::optional<EnumerationResult> e;
  if (cfg.enumerate) e = todd_coxeter(coxeter_presentation(sig), cfg.max_cosets);
  if (cfg.json) {
    ordered_json j;
    j["signature"] = {2, sig.a, sig.b, sig.c};
    j["verdict"] = to_string(v.status);
    j["clause"] = v.clause;
    if (e) {
      j["enumeration"] = e->finite() ? "FINITE" : "INCONCLUSIVE";
      j["cosets_defined"] = e->cosets_defined;
      if (e->order) j["order"] = *e->order;
    }
    out << j.dump() << "\n";
    return kExitOk;
  }
  out << sig.str() << " " << to_string(v.status);
  if (!v.clause.empty()) out << " clause " << v.clause;
  if (e) {
    out << "; enumeration "
        << (e->finite() ? "FINITE order " + std::to_string(*e->order) : std::string("INCONCLUSIVE"))
        << " (" << e->cosets_defined << " cosets defined)";
  }
  out << "\n";
  return kExitOk;
}

}  // namespace

int run(const Config& cfg, std::ostream& out, std::ostream& err) {
  try {
    switch (cfg.command) {
      case Command::kClassify: return run_classify(cfg, out);
      case Command::kSweep: return run_sweep(cfg, out, err);
      case Command::kNorm: return run_norm(cfg, out);
      case Command::kChars: return run_chars(cfg, out);
      case Command::kGroupPresent: return run_present(cfg, out);
      case Command::kGroupCoxeter: return run_coxeter(cfg, out);
    }
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}

}  // namespace pretzel::cli
