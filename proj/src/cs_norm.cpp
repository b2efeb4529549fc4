#include "pretzel/cs_norm.hpp"

#include <stdexcept>
#include <string>

namespace pretzel {

namespace {

constexpr const char* kMeridianMinimal =
    "meridian has minimal norm S (Culler-Gordon-Luecke-Shalen, Cor. 1.1.4)";
constexpr const char* kCyclicMinimal =
    "a cyclic filling slope has minimal norm S (Culler-Gordon-Luecke-Shalen, Cor. 1.1.4)";
constexpr const char* kMinimality = "S is the minimal nonzero norm on the lattice";
constexpr const char* kConvexity =
    "norm convexity: midpoint of (2a+1,2) and (+-1,0) given ||alpha|| <= S+8 "
    "(Boyer-Zhang, Thm. 2.3)";
constexpr const char* kEvenBound =
    "even fillings 2a/b, b odd: six smooth zeros of f_alpha from >= 3 irreducible "
    "PSL2 characters of the triangle quotient (Boyer-Boileau, Thm. A)";

}  // namespace

std::string to_string(NormRelation r) {
  switch (r) {
    case NormRelation::kEq: return "EQ";
    case NormRelation::kLe: return "LE";
    case NormRelation::kGe: return "GE";
  }
  return "EQ";
}

std::string NormConstraint::rhs_str() const {
  if (offset == 0) return "S";
  return offset > 0 ? "S+" + offset.str() : "S" + offset.str();
}

std::vector<Integer> norm_form(const std::vector<Slope>& boundary, const Slope& gamma) {
  if (boundary.empty()) throw std::invalid_argument("norm form needs at least one boundary slope");
  std::vector<Integer> coeffs;
  coeffs.reserve(boundary.size());
  for (const Slope& beta : boundary) coeffs.push_back(2 * distance(gamma, beta));
  return coeffs;
}

NormSystem::NormSystem(std::vector<Slope> boundary) : boundary_(std::move(boundary)) {
  if (boundary_.empty()) throw std::invalid_argument("norm system needs boundary slopes");
}

void NormSystem::add(const Slope& gamma, NormRelation relation, Integer offset,
                     std::string citation) {
  constraints_.push_back(
      {gamma, norm_form(boundary_, gamma), relation, std::move(offset), std::move(citation)});
}

bool NormSystem::is_homogeneous() const {
  for (const auto& c : constraints_) {
    if (c.offset != 0) return false;
  }
  return true;
}

std::vector<lp::Row> NormSystem::rows(const std::vector<std::size_t>& unit_lower_bounds) const {
  const std::size_t n = boundary_.size();
  std::vector<lp::Row> out;
  for (const auto& c : constraints_) {
    lp::Row row;
    row.coeffs.reserve(n + 1);
    for (const Integer& v : c.coeffs) row.coeffs.emplace_back(v);
    row.coeffs.emplace_back(-1);  // move S to the left-hand side
    switch (c.relation) {
      case NormRelation::kEq: row.rel = lp::Relation::kEq; break;
      case NormRelation::kLe: row.rel = lp::Relation::kLe; break;
      case NormRelation::kGe: row.rel = lp::Relation::kGe; break;
    }
    row.rhs = Rational(c.offset);
    out.push_back(std::move(row));
  }
  for (std::size_t i : unit_lower_bounds) {
    if (i >= n) throw std::out_of_range("coefficient index out of range");
    lp::Row row;
    row.coeffs.assign(n + 1, Rational(0));
    row.coeffs[i] = 1;
    row.rel = lp::Relation::kGe;
    row.rhs = 1;
    out.push_back(std::move(row));
  }
  return out;
}

FeasibilityVerdict check_feasibility(const NormSystem& system,
                                     const std::vector<std::size_t>& unit_lower_bounds) {
  const auto rows = system.rows(unit_lower_bounds);
  const lp::Result r = lp::solve(rows, system.num_unknowns());
  FeasibilityVerdict v;
  v.feasible = r.feasible;
  if (unit_lower_bounds.size() == 2) {
    v.pair_tested = std::make_pair(unit_lower_bounds[0], unit_lower_bounds[1]);
  }
  if (r.feasible) {
    v.sample = r.point;
  } else {
    v.witness = r.multipliers;
  }
  return v;
}

bool verify(const NormSystem& system, const FeasibilityVerdict& verdict) {
  std::vector<std::size_t> bounds;
  if (verdict.pair_tested) bounds = {verdict.pair_tested->first, verdict.pair_tested->second};
  const auto rows = system.rows(bounds);
  if (verdict.feasible) return lp::satisfies(rows, verdict.sample);
  return lp::verify_farkas(rows, verdict.witness);
}

bool PairwiseInfeasibility::all_infeasible() const {
  for (const auto& v : pairs) {
    if (v.feasible) return false;
  }
  return !pairs.empty();
}

std::optional<std::pair<std::size_t, std::size_t>> PairwiseInfeasibility::offending_pair() const {
  for (const auto& v : pairs) {
    if (v.feasible) return v.pair_tested;
  }
  return std::nullopt;
}

PairwiseInfeasibility pairwise_infeasibility(const NormSystem& system) {
  PairwiseInfeasibility out{system, {}};
  const std::size_t n = system.boundary().size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      out.pairs.push_back(check_feasibility(system, {i, j}));
    }
  }
  return out;
}

NormSystem cyclic_system_minus2_5_q(long long q) {
  if (q % 2 == 0 || q < 9) {
    throw std::domain_error("the (-2,5,q) norm argument needs odd q >= 9, got q=" +
                            std::to_string(q));
  }
  NormSystem sys(slope_sequence_minus2_5_q(q));
  sys.add(Slope::meridian(), NormRelation::kEq, 0, kMeridianMinimal);
  sys.add(Slope(2 * q + 5), NormRelation::kEq, 0, kCyclicMinimal);
  sys.add(Slope(2 * q + 4), NormRelation::kGe, 0, kMinimality);
  return sys;
}

PairwiseInfeasibility cyclic_infeasibility_minus2_5_q(long long q) {
  return pairwise_infeasibility(cyclic_system_minus2_5_q(q));
}

HalfIntegralBound half_integral_norm_bound(const Slope& alpha) {
  if (alpha.den() != 2) {
    throw std::invalid_argument("expected a half-integral slope (2a+1)/2, got " + alpha.str());
  }
  // alpha = (2a+1)/2; floor division keeps this right for negative numerators.
  const Integer a = floor_div(alpha.num(), 2);
  HalfIntegralBound out{alpha, Slope(a + 1, 1), Slope(a, 1), {}, Slope(is_even(a) ? a : a + 1, 1)};
  for (const Slope& s : {out.upper_neighbor, out.lower_neighbor}) {
    out.bounds.push_back({s, {}, NormRelation::kLe, 4, kConvexity});
  }
  return out;
}

EvenFillingBound even_filling_lower_bound(const Slope& gamma) {
  EvenFillingBound out;
  if (!has_even_numerator(gamma)) return out;
  out.applicable = true;
  out.constraint = NormConstraint{gamma, {}, NormRelation::kGe, 12, kEvenBound};
  return out;
}

UniqueOddDeduction unique_odd_finite_slope(const Slope& u, const Slope& v) {
  if (!is_odd_integral(u) || !is_odd_integral(v)) {
    throw std::invalid_argument("expected odd integral slopes, got " + u.str() + " and " + v.str());
  }
  if (u == v) throw std::invalid_argument("slopes must be distinct, got " + u.str() + " twice");
  const Integer lo = u.num() < v.num() ? u.num() : v.num();
  const Integer hi = u.num() < v.num() ? v.num() : u.num();
  UniqueOddDeduction out{u, v, {}, Slope(lo + 1, 1)};
  for (Integer e = lo + 1; e < hi; e += 2) out.even_points.emplace_back(e, 1);
  return out;
}

bool nearby_nonintegral_window(const Integer& u, const BoundarySlopeSet& nonintegral) {
  if (nonintegral.completeness == Completeness::kCandidateOnly) {
    throw std::domain_error("window test is unsound without a complete non-integral slope set");
  }
  for (const Slope& s : nonintegral.slopes) {
    if (s.is_meridian()) continue;
    Rational gap = Rational(u) - s.value();
    if (gap < 0) gap = -gap;
    if (gap < 1) return true;
  }
  return false;
}

}  // namespace pretzel
