#pragma once

#include <string>
#include <vector>

#include "pretzel/integer.hpp"

namespace pretzel {

using IntegerMatrix = std::vector<std::vector<Integer>>;

/// Z^free_rank + Z/d_1 + ... + Z/d_k with 1 < d_1 | d_2 | ... | d_k.
struct AbelianInvariants {
  std::vector<Integer> torsion;
  std::size_t free_rank = 0;

  bool is_trivial() const { return torsion.empty() && free_rank == 0; }
  /// Order of the group; zero when infinite.
  Integer order() const;
  /// "Z^2 + Z/3 + Z/6", "1" for the trivial group.
  std::string str() const;

  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Diagonal of the Smith normal form (nonnegative, divisibility chain), with
/// one entry per min(rows, cols) position.
std::vector<Integer> smith_diagonal(IntegerMatrix m, std::size_t cols);

/// Cokernel of the relation matrix: rows are relators, columns generators.
AbelianInvariants abelian_invariants(const IntegerMatrix& relations, std::size_t num_generators);

}  // namespace pretzel
