#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pretzel/smith.hpp"
#include "pretzel/word.hpp"

namespace pretzel {

struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  std::size_t num_generators() const { return generators.size(); }
  /// Throws std::invalid_argument if a relator uses an undeclared generator.
  void validate() const;
  std::string str() const;
};

/// Exponent-sum matrix, one row per relator.
IntegerMatrix relation_matrix(const GroupPresentation& g);

AbelianInvariants abelianization(const GroupPresentation& g);

/// Generator indices of the knot group presentation.
enum KnotGenerator : int { kX = 0, kY = 1, kZ = 2 };

/// Wirtinger presentation of the (p,q,-r) pretzel knot, p,q odd >= 3 and
/// r even >= 4, on generators x, y, z. Each relator is lhs * rhs^-1 of
///   (zx)^((p-1)/2) z (zx)^((1-p)/2)       = (yx)^(-(q+1)/2) y (yx)^((q+1)/2)
///   (yz^-1)^(-r/2) y (yz^-1)^(r/2)        = (yx)^((1-q)/2) x (yx)^((q-1)/2)
///   (yz^-1)^(-r/2) z (yz^-1)^(r/2)        = (zx)^((p+1)/2) x (zx)^(-(p+1)/2)
GroupPresentation wirtinger_presentation(long long p, long long q, long long r);

/// x^(-2(p+q)) (yx)^((q-1)/2) (yz^-1)^(-r/2) (yx)^((q+1)/2) (zx)^((p-1)/2)
///   (yz^-1)^(r/2) (zx)^((p+1)/2)
Word longitude_word(long long p, long long q, long long r);

/// Wirtinger presentation plus the filling relator x^s l.
GroupPresentation filled_presentation(long long p, long long q, long long r, long long s);

/// The filled presentation with (yz^-1)^(r/2), yx^-1 and (zx)^p adjoined.
GroupPresentation coxeter_precursor(long long p, long long q, long long r, long long s);

/// (2,a,b;c) with 2 <= a <= b and c >= 2.
struct CoxeterSignature {
  long long a = 2;
  long long b = 2;
  long long c = 2;

  /// Sorts (a, b); throws std::invalid_argument if any entry is below 2.
  static CoxeterSignature normalized(long long a, long long b, long long c);

  std::string str() const;
  friend bool operator==(const CoxeterSignature&, const CoxeterSignature&) = default;
};

/// <R,S | R^a, S^b, (RS)^2, (R^2 S^2)^c>
GroupPresentation coxeter_presentation(const CoxeterSignature& sig);

struct CoxeterQuotient {
  /// <y,z | (yz^-1)^(r/2), (zy)^p, z^-1 (zy)^((p+1)/2) y (zy)^(-(p+1)/2), y^(s-2p)>
  GroupPresentation intermediate;
  /// <w,y | (y^2 w^2)^(r/2), w^p, (wy)^2, y^(s-2p)> with w = (zy)^((p-1)/2)
  GroupPresentation two_generator;
  /// (2, p, |s-2p|; r/2) sorted; empty when |s-2p| = 1, where y is trivial
  /// and the quotient collapses to the trivial group.
  std::optional<CoxeterSignature> signature;
};

/// Requires p odd >= 3, r even >= 4 and s odd. Throws std::domain_error when
/// s = 2p (degenerate quotient).
CoxeterQuotient coxeter_quotient(long long p, long long r, long long s);

/// Orders for reducing words in <f,g,h | f^m, g^|p|, h^|q|>.
enum TriangleGenerator : int { kF = 0, kG = 1, kH = 2 };

/// Repeatedly reduces run exponents modulo the generator orders and freely
/// reduces until stable. `orders` is indexed by TriangleGenerator.
Word reduce_in_torsion_quotient(const Word& w, const std::array<long long, 3>& orders);

/// g^k f^m g^(k+1) h^l f^m h^(l+1) with k = (|p|-1)/2, l = (|q|-1)/2, m = |r|/2:
/// the image of the longitude in Delta(|p|,|q|,|r|).
Word triangle_longitude(long long p, long long q, long long r);

/// True iff the triangle longitude dies in <f,g,h | f^m, g^|p|, h^|q|>.
bool longitude_triviality_check(long long p, long long q, long long r);

}  // namespace pretzel
