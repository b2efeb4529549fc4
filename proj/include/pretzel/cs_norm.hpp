#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pretzel/boundary_slopes.hpp"
#include "pretzel/rational_lp.hpp"
#include "pretzel/slope.hpp"

namespace pretzel {

/// Total Culler-Shalen norm modelled as ||g|| = 2 * sum_i a_i * Delta(g, beta_i)
/// over unknown coefficients a_i >= 0, compared against the minimal norm S.
///
/// Unknowns are ordered a_1..a_n followed by S.

enum class NormRelation { kEq, kLe, kGe };

std::string to_string(NormRelation r);

/// ||gamma|| (relation) S + offset. `coeffs[i]` is 2 * Delta(gamma, beta_i).
struct NormConstraint {
  Slope gamma;
  std::vector<Integer> coeffs;
  NormRelation relation = NormRelation::kEq;
  Integer offset = 0;
  std::string citation;

  std::string rhs_str() const;
};

/// Coefficients of ||gamma|| in the unknowns a_1..a_n.
std::vector<Integer> norm_form(const std::vector<Slope>& boundary, const Slope& gamma);

class NormSystem {
 public:
  explicit NormSystem(std::vector<Slope> boundary);

  void add(const Slope& gamma, NormRelation relation, Integer offset, std::string citation);

  const std::vector<Slope>& boundary() const { return boundary_; }
  const std::vector<NormConstraint>& constraints() const { return constraints_; }
  std::size_t num_unknowns() const { return boundary_.size() + 1; }

  /// Every constraint has zero offset.
  bool is_homogeneous() const;

  /// LP rows over (a_1..a_n, S), followed by a_i >= 1 for each index in
  /// `unit_lower_bounds`.
  std::vector<lp::Row> rows(const std::vector<std::size_t>& unit_lower_bounds = {}) const;

 private:
  std::vector<Slope> boundary_;
  std::vector<NormConstraint> constraints_;
};

struct FeasibilityVerdict {
  bool feasible = false;
  /// Zero-based indices (i, j) whose coefficients were forced to be >= 1.
  std::optional<std::pair<std::size_t, std::size_t>> pair_tested;
  std::vector<Rational> sample;   // set when feasible
  std::vector<Rational> witness;  // Farkas multipliers, one per LP row
};

/// Feasibility of the system with a_i >= 1 for each listed index.
FeasibilityVerdict check_feasibility(const NormSystem& system,
                                     const std::vector<std::size_t>& unit_lower_bounds = {});

/// Re-evaluates a verdict from the constraints alone.
bool verify(const NormSystem& system, const FeasibilityVerdict& verdict);

struct PairwiseInfeasibility {
  NormSystem system;
  /// One verdict per pair i < j in lexicographic order.
  std::vector<FeasibilityVerdict> pairs;

  bool all_infeasible() const;
  /// The first feasible pair, if any.
  std::optional<std::pair<std::size_t, std::size_t>> offending_pair() const;
};

/// Tests "at least two coefficients nonzero" pair by pair: for each i < j,
/// the system with a_i >= 1 and a_j >= 1. Homogeneity makes this equivalent
/// to a_i, a_j > 0.
PairwiseInfeasibility pairwise_infeasibility(const NormSystem& system);

/// The (-2,5,q) system for a hypothetical cyclic slope 2q+5:
///   ||mu|| = S,  ||2q+5|| = S,  ||2q+4|| >= S
/// over the six boundary slopes of (-2,5,q). Requires odd q >= 9.
NormSystem cyclic_system_minus2_5_q(long long q);

PairwiseInfeasibility cyclic_infeasibility_minus2_5_q(long long q);

/// Convexity consequences of ||(2a+1)/2|| <= S+8 and ||mu|| = ||-mu|| = S:
/// the midpoints (a+1, 1) and (a, 1) have norm at most S+4, and the even one
/// of a, a+1 contradicts the S+12 bound for even fillings.
struct HalfIntegralBound {
  Slope alpha;
  Slope upper_neighbor;  // a+1, midpoint of alpha and mu
  Slope lower_neighbor;  // a, midpoint of alpha and -mu
  std::vector<NormConstraint> bounds;
  Slope even_neighbor;
};

/// Throws std::invalid_argument unless alpha has denominator 2.
HalfIntegralBound half_integral_norm_bound(const Slope& alpha);

struct EvenFillingBound {
  bool applicable = false;
  std::optional<NormConstraint> constraint;  // ||gamma|| >= S + 12
};

/// Applicable exactly for slopes 2a/b with b odd.
EvenFillingBound even_filling_lower_bound(const Slope& gamma);

/// Two distinct odd integral slopes with ||.|| <= S+8 force every even
/// integer between them to satisfy ||.|| <= S+8, against the S+12 bound.
struct UniqueOddDeduction {
  Slope first;
  Slope second;
  std::vector<Slope> even_points;  // all even integers strictly between
  Slope chosen;                    // the smallest of them
};

/// Throws std::invalid_argument unless the slopes are distinct odd integers.
UniqueOddDeduction unique_odd_finite_slope(const Slope& u, const Slope& v);

/// True iff some slope c/d in the set satisfies |u - c/d| < 1. Throws
/// std::domain_error for CANDIDATE_ONLY sets.
bool nearby_nonintegral_window(const Integer& u, const BoundarySlopeSet& nonintegral);

}  // namespace pretzel
