#include "pretzel/knot.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace pretzel {

namespace {

bool odd(long long v) { return (v % 2) != 0; }

int count_even(const std::array<long long, 3>& t) {
  return static_cast<int>(std::count_if(t.begin(), t.end(), [](long long v) { return !odd(v); }));
}

}  // namespace

PretzelKnot canonicalize(long long p, long long q, long long r) {
  if (p == 0 || q == 0 || r == 0) {
    throw std::invalid_argument("pretzel indices must be nonzero");
  }
  std::array<long long, 3> t{p, q, r};
  const auto negatives = std::count_if(t.begin(), t.end(), [](long long v) { return v < 0; });
  if (negatives >= 2) {
    for (auto& v : t) v = -v;
  }
  std::sort(t.begin(), t.end());
  return PretzelKnot(t);
}

PretzelKnot parse_pretzel(const std::string& text) {
  std::array<long long, 3> t{};
  std::istringstream in(text);
  for (std::size_t i = 0; i < 3; ++i) {
    std::string field;
    if (!std::getline(in, field, ',')) {
      throw std::invalid_argument("expected three comma-separated indices, got '" + text + "'");
    }
    std::size_t used = 0;
    try {
      t[i] = std::stoll(field, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed pretzel index '" + field + "'");
    }
    if (field.find_first_not_of(" \t", used) != std::string::npos) {
      throw std::invalid_argument("malformed pretzel index '" + field + "'");
    }
  }
  std::string rest;
  if (std::getline(in, rest)) throw std::invalid_argument("too many indices in '" + text + "'");
  return canonicalize(t[0], t[1], t[2]);
}

bool PretzelKnot::is_knot() const { return count_even(idx_) <= 1; }

std::string PretzelKnot::str() const {
  std::ostringstream out;
  out << "(" << idx_[0] << "," << idx_[1] << "," << idx_[2] << ")";
  return out.str();
}

TorusStatus torus_status(const PretzelKnot& k) {
  const auto& t = k.indices();
  if (t[0] == -2 && t[1] == 3 && (t[2] == 3 || t[2] == 5)) return TorusStatus::kTorus;
  if (t[0] == -2 && t[1] == 1 && t[2] > 0 && odd(t[2])) return TorusStatus::kTorus;
  const bool has_unit =
      std::any_of(t.begin(), t.end(), [](long long v) { return std::llabs(v) == 1; });
  return has_unit ? TorusStatus::kUnclassified : TorusStatus::kNotTorus;
}

KnotFamily family(const PretzelKnot& k) {
  if (is_torus(k)) return {FamilyTag::kTorus, 0, 0, 0};
  const auto& t = k.indices();
  const bool odd_pair = t[1] >= 3 && odd(t[1]) && odd(t[2]);
  if (odd_pair && t[0] == -2) return {FamilyTag::kMinus2PQ, t[1], t[2], 2};
  if (odd_pair && t[0] <= -4 && !odd(t[0])) return {FamilyTag::kPQMinusR, t[1], t[2], -t[0]};
  return {};
}

std::string to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kTorus: return "TORUS";
    case FamilyTag::kMinus2PQ: return "MINUS2_PQ";
    case FamilyTag::kPQMinusR: return "PQ_MINUS_R";
    case FamilyTag::kOther: return "OTHER";
  }
  return "OTHER";
}

bool hyperbolicity_condition(const PretzelKnot& k) {
  const auto& t = k.indices();
  if (count_even(t) != 1) {
    throw std::domain_error("hyperbolicity condition needs two odd indices and one even index: " +
                            k.str());
  }
  Rational sum = 0;
  for (long long v : t) {
    const long long m = std::llabs(v);
    sum += odd(v) ? Rational(1, m) : Rational(2, m);
  }
  return sum < 1;
}

}  // namespace pretzel
