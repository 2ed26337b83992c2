#pragma once

#include <optional>
#include <string>
#include <variant>

#include "ellfib/elliptic/curve.hpp"
#include "ellfib/exactmath/numfield.hpp"

namespace ellfib {

struct Torsion {
  int order;
  friend bool operator==(const Torsion&, const Torsion&) = default;
};
struct InfiniteOrder {
  friend bool operator==(const InfiniteOrder&, const InfiniteOrder&) = default;
};
using TorsionVerdict = std::variant<Torsion, InfiniteOrder>;

/// Largest possible order of a torsion point over Q (Mazur).
inline constexpr int kTorsionBoundRational = 12;
/// Largest possible order over a quadratic field (Kenku-Momose,
/// Kamienny).
inline constexpr int kTorsionBoundQuadratic = 18;

/// The uniform constant for number fields of the given degree, when one is
/// configured (degrees 1 and 2).
std::optional<int> uniform_torsion_bound(int field_degree);

/// Exact order of p if some m <= bound kills it, InfiniteOrder otherwise.
/// With bound at least the uniform constant, InfiniteOrder is a proof.
/// A smaller bound raises Error(BoundTooSmall) unless `override_bound` is
/// set, in which case InfiniteOrder only means "no order up to bound".
TorsionVerdict torsion_certify(const EllipticCurve<Rat>& e, const Point<Rat>& p,
                               int bound = kTorsionBoundRational, bool override_bound = false);

/// Same over a number field; the default bound follows the degree of the
/// field generated by the curve and point coordinates. Degrees above 2
/// have no configured constant and need an explicit bound with override.
TorsionVerdict torsion_certify(const EllipticCurve<NfElem>& e, const Point<NfElem>& p,
                               std::optional<int> bound = std::nullopt, bool override_bound = false);

/// max(|num|, den) of the x-coordinate; 0 for infinity.
Integer naive_height(const Point<Rat>& p);

std::string to_string(const TorsionVerdict& v);

}  // namespace ellfib
