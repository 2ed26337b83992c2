#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ellfib/exactmath/polynomial.hpp"
#include "ellfib/exactmath/rat.hpp"

namespace ellfib {

using Poly = Polynomial<Rat>;

/// Polynomial with coefficients given as rational strings, ascending degree.
Poly poly_from_strings(std::span<const std::string> coeffs);
std::vector<std::string> poly_to_strings(const Poly& p);
/// Human-readable form such as "t^4 - 2", highest degree first.
std::string to_string(const Poly& p, char var = 't');

/// Integer content and primitive part: p = content * primitive, with the
/// primitive part having coprime integer coefficients and a positive leading
/// coefficient.
std::pair<Rat, std::vector<Integer>> primitive_part(const Poly& p);

/// Monic gcd computed with the subresultant remainder sequence over Z.
/// Throws Error(BothZero) when both inputs vanish.
Poly poly_gcd(const Poly& a, const Poly& b);

/// Resultant res(p, q). Zero inputs give Error(ZeroInput).
Rat resultant(const Poly& p, const Poly& q);

/// disc(p) = (-1)^(d(d-1)/2) res(p, p') / lead(p). Degree-0 input gives 1.
Rat discriminant(const Poly& p);

/// discriminant(p) when q is absent, resultant(p, q) otherwise.
Rat discriminant_resultant(const Poly& p, const std::optional<Poly>& q = std::nullopt);

/// Determinant of the Sylvester matrix with formal degrees a.size()-1 and
/// b.size()-1; leading entries may be zero.
Rat sylvester_resultant(std::span<const Rat> a, std::span<const Rat> b);

struct SquarefreeFactor {
  Poly factor;  // monic, squarefree
  int multiplicity;
  friend bool operator==(const SquarefreeFactor&, const SquarefreeFactor&) = default;
};

/// Yun's algorithm. Factors are pairwise coprime, monic, squarefree and
/// listed with strictly increasing multiplicity; the product of
/// factor^multiplicity times lead(p) reproduces p.
std::vector<SquarefreeFactor> squarefree_decompose(const Poly& p);

/// Monic squarefree part (product of the distinct irreducible factors).
Poly squarefree_part(const Poly& p);

struct RationalRoot {
  Rat value;
  int multiplicity;
  friend bool operator==(const RationalRoot&, const RationalRoot&) = default;
};

/// All rational roots with exact multiplicities, ascending. Roots are found
/// modulo a good prime, Hensel-lifted past the Cauchy bound and recovered by
/// rational reconstruction, then confirmed by exact evaluation.
std::vector<RationalRoot> rational_roots(const Poly& p);

/// Factorization of a quartic into two rational quadratics, when one exists.
/// Uses the resolvent cubic; no integer factoring is needed.
std::optional<std::pair<Poly, Poly>> quartic_quadratic_split(const Poly& quartic);

/// Splitting of a squarefree polynomial into rational linear factors and
/// monic irreducible quadratics. Whatever cannot be split this way (a part
/// of degree >= 3 without rational roots that is not a product of two
/// quadratics) is returned as `remainder`.
struct LowDegreeSplit {
  std::vector<Rat> roots;
  std::vector<Poly> quadratics;
  Poly remainder;  // monic; constant 1 when fully split
};
LowDegreeSplit split_low_degree(const Poly& squarefree);

/// Roots of p over fields of degree <= 2, with multiplicities: rational
/// roots, monic irreducible quadratic factors, and whatever is left as
/// unresolved squarefree factors (degree >= 3, not split by the above).
struct LowDegreeRoots {
  std::vector<RationalRoot> rational;
  std::vector<std::pair<Poly, int>> quadratic;
  std::vector<std::pair<Poly, int>> unresolved;

  int unresolved_degree() const;
};
LowDegreeRoots low_degree_roots(const Poly& p);

/// Newton interpolation through (xs[i], ys[i]) with distinct xs.
Poly interpolate(std::span<const Rat> xs, std::span<const Rat> ys);

}  // namespace ellfib
