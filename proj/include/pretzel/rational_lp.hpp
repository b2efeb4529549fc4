#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "pretzel/integer.hpp"

namespace pretzel::lp {

enum class Relation { kEq, kLe, kGe };

/// coeffs . x  (rel)  rhs
struct Row {
  std::vector<Rational> coeffs;
  Relation rel = Relation::kEq;
  Rational rhs = 0;
};

/// Outcome of a feasibility test for {rows, x >= 0}.
///
/// Feasible: `point` satisfies every row exactly.
/// Infeasible: `multipliers` is a Farkas certificate, one entry per row, with
/// sign >= 0 on GE rows, <= 0 on LE rows and free on EQ rows, such that the
/// combination sum(m_k * coeffs_k) is componentwise <= 0 while
/// sum(m_k * rhs_k) > 0. Any x >= 0 satisfying the rows would then give
/// 0 >= sum(m_k * coeffs_k) . x >= sum(m_k * rhs_k) > 0.
struct Result {
  bool feasible = false;
  std::vector<Rational> point;
  std::vector<Rational> multipliers;
};

/// Phase-one simplex over exact rationals with Bland's rule. Every row must
/// have exactly `num_vars` coefficients.
Result solve(std::span<const Row> rows, std::size_t num_vars);

bool satisfies(std::span<const Row> rows, std::span<const Rational> point);

/// Re-checks a Farkas certificate from scratch.
bool verify_farkas(std::span<const Row> rows, std::span<const Rational> multipliers);

}  // namespace pretzel::lp
