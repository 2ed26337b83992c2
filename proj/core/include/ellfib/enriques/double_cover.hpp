#pragma once

#include <optional>
#include <vector>

#include "ellfib/enriques/cone.hpp"
#include "ellfib/fibration/multisection.hpp"

namespace ellfib {

/// A double point of the section against R: a root of the stripped factor.
struct Tangency {
  NfElem t;  // rational or quadratic; unused when at_infinity
  bool at_infinity = false;
  int multiplicity;  // in G_s
  bool salient;      // the K3 fiber over t is smooth
};

/// D_s: w^2 = G_s(t) = r(t)^2 q(t) with q squarefree.
struct DoubleCover {
  Poly g;
  Poly stripped;   // r, monic
  Poly remainder;  // q, carries the leading coefficient of G
  /// Odd-multiplicity roots of G on the whole line, infinity included.
  int branch_points = 0;
  int genus = 0;
  /// No branch points: D_s splits into two copies of the section.
  bool split = false;
  /// Genus one: w'^2 = q(t), marked when a point is visible.
  std::optional<QuarticModel<Rat>> quartic;
  std::vector<Tangency> tangencies;
  int unresolved_tangency_degree = 0;

  bool elliptic() const { return genus == 1 && !split; }
};

/// genus = ceil(k/2) - 1 for k branch points (k = 0 reports genus 0 and
/// split). Errors: ZeroIntersection (G_s = 0), FieldMismatch (irrational s).
DoubleCover multisection_from_section(const RamificationData& r, const SectionConic& s);

/// Weierstrass model of the K3 double cover, fibered over the generators.
/// With c4 a square the fiber quartic w^2 = F(t, z) is reduced at its
/// infinity branch sqrt(c4). Otherwise, when allowed, the Jacobian
/// y^2 = x^3 - 27 I x - 27 J of the fiber quartic is used; both routes keep
/// the j-invariant of every smooth fiber and record themselves in the
/// provenance. Errors: LeadingCoefficientNotSquare.
FibrationModel k3_weierstrass_model(const RamificationData& r, bool allow_quadratic_twist_extension = false);

/// The section coming from the other infinity branch -sqrt(c4).
/// Error(UnsupportedRepresentation) for models without a quartic source.
Section k3_second_section(const FibrationModel& k3);

/// The graph multisection of D_s on the K3 model, elliptic when D_s is of
/// genus one with a marked point; `generator` lives on its Jacobian.
Multisection k3_multisection(const FibrationModel& k3, const SectionConic& s, const DoubleCover& d,
                             std::optional<Point<Rat>> generator = std::nullopt);

}  // namespace ellfib
