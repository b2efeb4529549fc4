#include "pretzel/smith.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace pretzel {

Integer AbelianInvariants::order() const {
  if (free_rank > 0) return 0;
  Integer n = 1;
  for (const Integer& d : torsion) n *= d;
  return n;
}

std::string AbelianInvariants::str() const {
  std::vector<std::string> parts;
  if (free_rank == 1) parts.push_back("Z");
  if (free_rank > 1) parts.push_back("Z^" + std::to_string(free_rank));
  for (const Integer& d : torsion) parts.push_back("Z/" + d.str());
  if (parts.empty()) return "1";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out += " + " + parts[i];
  return out;
}

namespace {

struct Position {
  std::size_t row;
  std::size_t col;
};

// Smallest nonzero magnitude in the trailing block, scanning row-major so the
// choice is deterministic.
std::optional<Position> smallest_entry(const IntegerMatrix& m, std::size_t t, std::size_t cols) {
  std::optional<Position> best;
  Integer best_abs;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < cols; ++j) {
      if (m[i][j] == 0) continue;
      const Integer a = abs(m[i][j]);
      if (!best || a < best_abs) {
        best = Position{i, j};
        best_abs = a;
      }
    }
  }
  return best;
}

void swap_cols(IntegerMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

std::vector<Integer> smith_diagonal(IntegerMatrix m, std::size_t cols) {
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged relation matrix");
  }
  const std::size_t rows = m.size();
  const std::size_t diag = std::min(rows, cols);
  std::vector<Integer> out;
  for (std::size_t t = 0; t < diag; ++t) {
    for (;;) {
      const auto pivot = smallest_entry(m, t, cols);
      if (!pivot) {
        out.resize(diag, Integer(0));
        return out;
      }
      std::swap(m[t], m[pivot->row]);
      swap_cols(m, t, pivot->col);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const Integer f = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) m[i][j] -= f * m[t][j];
        if (m[i][t] != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const Integer f = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) m[i][j] -= f * m[i][t];
        if (m[t][j] != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder is now the pivot candidate

      // Enforce divisibility: fold an offending row into row t and retry.
      std::optional<std::size_t> offender;
      for (std::size_t i = t + 1; i < rows && !offender; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            offender = i;
            break;
          }
        }
      }
      if (!offender) break;
      for (std::size_t j = t; j < cols; ++j) m[t][j] += m[*offender][j];
    }
    out.push_back(abs(m[t][t]));
  }
  return out;
}

AbelianInvariants abelian_invariants(const IntegerMatrix& relations, std::size_t num_generators) {
  const auto diag = smith_diagonal(relations, num_generators);
  AbelianInvariants inv;
  std::size_t rank = 0;
  for (const Integer& d : diag) {
    if (d == 0) continue;
    ++rank;
    if (d > 1) inv.torsion.push_back(d);
  }
  inv.free_rank = num_generators - rank;
  return inv;
}

}  // namespace pretzel
