#include "pretzel/certificate_io.hpp"

#include <json.hpp>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace pretzel {

using ordered_json = nlohmann::ordered_json;

CertificateFormat parse_format(const std::string& name) {
  if (name == "json") return CertificateFormat::kJson;
  if (name == "text") return CertificateFormat::kText;
  throw std::invalid_argument("unknown certificate format '" + name + "'");
}

namespace {

// Integral slopes as JSON integers when they fit, otherwise "a/b" strings.
ordered_json slope_json(const Slope& s) {
  if (s.is_integral() && s.num() >= std::numeric_limits<long long>::min() &&
      s.num() <= std::numeric_limits<long long>::max()) {
    return s.num().convert_to<long long>();
  }
  return s.str();
}

Slope slope_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Slope(j.get<long long>());
  if (j.is_string()) return parse_slope(j.get<std::string>());
  throw std::invalid_argument("slope must be an integer or an \"a/b\" string");
}

ordered_json to_json(const Certificate& c) {
  ordered_json out;
  const auto& idx = c.knot.indices();
  out["pretzel"] = {idx[0], idx[1], idx[2]};
  out["question"] = to_string(c.question);
  out["family"] = to_string(family(c.knot).tag);
  out["verdict"] = to_string(c.verdict());
  out["realized"] = ordered_json::array();
  for (const Slope& s : c.realized()) out["realized"].push_back(slope_json(s));
  out["candidates"] = ordered_json::array();
  for (const CandidateSlope& cand : c.candidates) {
    ordered_json j;
    j["slope"] = slope_json(cand.slope);
    j["status"] = to_string(cand.status);
    j["rule"] = c.rules.at(cand.step).id;
    j["step"] = cand.step;
    out["candidates"].push_back(std::move(j));
  }
  out["rules"] = ordered_json::array();
  for (std::size_t i = 0; i < c.rules.size(); ++i) {
    const RuleApplication& r = c.rules[i];
    const RuleInfo& info = rule_info(r.id);
    ordered_json j;
    j["step"] = i;
    j["id"] = r.id;
    j["citation"] = std::string(info.citation);
    j["anchor"] = std::string(info.anchor);
    ordered_json inputs = ordered_json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = std::move(inputs);
    j["conclusion"] = r.conclusion;
    out["rules"].push_back(std::move(j));
  }
  out["annotations"] = c.annotations;
  return out;
}

}  // namespace

std::string emit_certificate(const Certificate& c, CertificateFormat format, bool cite) {
  if (format == CertificateFormat::kJson) return to_json(c).dump();

  std::ostringstream out;
  out << "knot " << c.knot.str() << "  question " << to_string(c.question) << "  family "
      << to_string(family(c.knot).tag) << "\n";
  out << "verdict " << to_string(c.verdict());
  const auto realized = c.realized();
  if (!realized.empty()) {
    out << " {";
    for (std::size_t i = 0; i < realized.size(); ++i) out << (i ? "," : "") << realized[i].str();
    out << "}";
  }
  out << "\n";
  for (std::size_t i = 0; i < c.rules.size(); ++i) {
    const RuleApplication& r = c.rules[i];
    out << "  [" << i << "] " << r.id << ": " << r.conclusion << "\n";
    if (cite) {
      const RuleInfo& info = rule_info(r.id);
      out << "       cite: " << info.citation << "\n";
      out << "       fact: " << info.anchor << "\n";
    }
  }
  for (const CandidateSlope& cand : c.candidates) {
    out << "  slope " << cand.slope.str() << "  " << to_string(cand.status) << " by ["
        << cand.step << "] " << c.rules.at(cand.step).id << "\n";
  }
  for (const std::string& a : c.annotations) out << "  note: " << a << "\n";
  return out.str();
}

Certificate parse_certificate_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("certificate is not valid JSON: ") + e.what());
  }
  try {
    const auto p = j.at("pretzel").get<std::vector<long long>>();
    if (p.size() != 3) throw std::invalid_argument("pretzel needs three indices");
    const PretzelKnot k = canonicalize(p[0], p[1], p[2]);
    if (k.indices() != std::array<long long, 3>{p[0], p[1], p[2]}) {
      throw std::invalid_argument("pretzel indices are not canonical");
    }
    Certificate c{k, parse_question(j.at("question").get<std::string>()), {}, {}, {}};
    for (const auto& r : j.at("rules")) {
      RuleApplication app;
      app.id = r.at("id").get<std::string>();
      rule_info(app.id);
      for (const auto& [key, value] : r.at("inputs").items()) {
        app.inputs.emplace_back(key, value.get<std::string>());
      }
      app.conclusion = r.at("conclusion").get<std::string>();
      c.rules.push_back(std::move(app));
    }
    for (const auto& cand : j.at("candidates")) {
      const std::size_t step = cand.at("step").get<std::size_t>();
      if (step >= c.rules.size() || c.rules[step].id != cand.at("rule").get<std::string>()) {
        throw std::invalid_argument("candidate references a missing rule step");
      }
      c.candidates.push_back({slope_from_json(cand.at("slope")),
                              parse_slope_status(cand.at("status").get<std::string>()), step});
    }
    c.annotations = j.at("annotations").get<std::vector<std::string>>();
    if (j.at("verdict").get<std::string>() != to_string(c.verdict())) {
      throw std::invalid_argument("stored verdict disagrees with the rule chain");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace pretzel
