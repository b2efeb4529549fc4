#include "pretzel/rational_lp.hpp"

#include <optional>
#include <stdexcept>

namespace pretzel::lp {

namespace {

// Dense phase-one tableau. Columns are laid out as
//   [0, n)           structural variables
//   [n, n+m)         slack/surplus (unused for equality rows)
//   [n+m, n+2m)      artificials, one per row
// and the final column holds the right-hand side.
class Tableau {
 public:
  Tableau(std::span<const Row> rows, std::size_t num_vars)
      : m_(rows.size()), n_(num_vars), width_(num_vars + 2 * rows.size()),
        cells_(m_, std::vector<Rational>(width_ + 1)), basis_(m_), sign_(m_, 1) {
    for (std::size_t i = 0; i < m_; ++i) {
      const Row& row = rows[i];
      if (row.coeffs.size() != n_) throw std::invalid_argument("row width mismatch");
      Relation rel = row.rel;
      if (row.rhs < 0) {
        sign_[i] = -1;
        if (rel == Relation::kLe) rel = Relation::kGe;
        else if (rel == Relation::kGe) rel = Relation::kLe;
      }
      for (std::size_t j = 0; j < n_; ++j) cells_[i][j] = sign_[i] * row.coeffs[j];
      cells_[i][width_] = sign_[i] * row.rhs;
      if (rel == Relation::kLe) cells_[i][n_ + i] = 1;
      if (rel == Relation::kGe) cells_[i][n_ + i] = -1;
      cells_[i][artificial(i)] = 1;
      basis_[i] = artificial(i);
    }
  }

  std::size_t artificial(std::size_t i) const { return n_ + m_ + i; }
  Rational cost(std::size_t col) const { return col >= n_ + m_ ? 1 : 0; }

  Rational reduced_cost(std::size_t col) const {
    Rational d = cost(col);
    for (std::size_t i = 0; i < m_; ++i) d -= cost(basis_[i]) * cells_[i][col];
    return d;
  }

  // Bland's rule: lowest-index improving column, ties in the ratio test
  // broken by the lowest basic variable index.
  void optimize() {
    for (;;) {
      std::optional<std::size_t> entering;
      for (std::size_t j = 0; j < width_; ++j) {
        if (reduced_cost(j) < 0) {
          entering = j;
          break;
        }
      }
      if (!entering) return;
      std::optional<std::size_t> leaving;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        const Rational& a = cells_[i][*entering];
        if (a <= 0) continue;
        const Rational ratio = cells_[i][width_] / a;
        if (!leaving || ratio < best || (ratio == best && basis_[i] < basis_[*leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      // Phase one is bounded below by zero, so some row always qualifies.
      if (!leaving) throw std::logic_error("unbounded phase-one objective");
      pivot(*leaving, *entering);
    }
  }

  Rational objective() const {
    Rational w = 0;
    for (std::size_t i = 0; i < m_; ++i) w += cost(basis_[i]) * cells_[i][width_];
    return w;
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(n_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = cells_[i][width_];
    }
    return x;
  }

  // y = c_B^T B^{-1}; the artificial block of the tableau holds B^{-1}.
  // Mapped back through the row sign flips applied at construction.
  std::vector<Rational> dual() const {
    std::vector<Rational> y(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      Rational acc = 0;
      for (std::size_t i = 0; i < m_; ++i) acc += cost(basis_[i]) * cells_[i][artificial(k)];
      y[k] = sign_[k] * acc;
    }
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational p = cells_[r][c];
    for (auto& v : cells_[r]) v /= p;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r) continue;
      const Rational f = cells_[i][c];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= width_; ++j) cells_[i][j] -= f * cells_[r][j];
    }
    basis_[r] = c;
  }

  std::size_t m_;
  std::size_t n_;
  std::size_t width_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<std::size_t> basis_;
  std::vector<int> sign_;
};

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

Result solve(std::span<const Row> rows, std::size_t num_vars) {
  Tableau t(rows, num_vars);
  t.optimize();
  Result out;
  if (t.objective() == 0) {
    out.feasible = true;
    out.point = t.primal();
  } else {
    out.multipliers = t.dual();
  }
  return out;
}

bool satisfies(std::span<const Row> rows, std::span<const Rational> point) {
  for (const Rational& v : point) {
    if (v < 0) return false;
  }
  for (const Row& row : rows) {
    if (row.coeffs.size() != point.size()) return false;
    const Rational lhs = dot(row.coeffs, point);
    switch (row.rel) {
      case Relation::kEq: if (lhs != row.rhs) return false; break;
      case Relation::kLe: if (lhs > row.rhs) return false; break;
      case Relation::kGe: if (lhs < row.rhs) return false; break;
    }
  }
  return true;
}

bool verify_farkas(std::span<const Row> rows, std::span<const Rational> multipliers) {
  if (rows.size() != multipliers.size() || rows.empty()) return false;
  const std::size_t n = rows.front().coeffs.size();
  std::vector<Rational> combo(n);
  Rational bound = 0;
  for (std::size_t k = 0; k < rows.size(); ++k) {
    const Rational& m = multipliers[k];
    if (rows[k].rel == Relation::kGe && m < 0) return false;
    if (rows[k].rel == Relation::kLe && m > 0) return false;
    if (rows[k].coeffs.size() != n) return false;
    for (std::size_t j = 0; j < n; ++j) combo[j] += m * rows[k].coeffs[j];
    bound += m * rows[k].rhs;
  }
  for (const Rational& c : combo) {
    if (c > 0) return false;
  }
  return bound > 0;
}

}  // namespace pretzel::lp
