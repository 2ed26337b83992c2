#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ellfib/elliptic/quartic.hpp"
#include "ellfib/fibration/model.hpp"

namespace ellfib {

/// A section t -> (x(t), y(t)), or the zero section.
class Section {
 public:
  Section() = default;  // zero section
  Section(RatFn x, RatFn y) : xy_(std::make_pair(std::move(x), std::move(y))) {}

  bool is_zero() const { return !xy_; }
  const RatFn& x() const { return xy_->first; }
  const RatFn& y() const { return xy_->second; }

  /// Throws Error(PointNotOnCurve) unless the identity holds in Q(t).
  void validate(const FibrationModel& f) const;

  /// Value on the fiber at b; a pole of x means the zero section is met.
  Point<Rat> at(const Rat& b) const;

  friend bool operator==(const Section&, const Section&) = default;

 private:
  std::optional<std::pair<RatFn, RatFn>> xy_;
};

struct ZeroSection {};

/// The 2-section x = c, y^2 = c^3 + a(t) c + b(t).
struct ConstantX {
  Rat c;
};

/// s -> (t(s), x(s), y(s)); degree = degree of t as a map.
struct Parametrized {
  RatFn t;
  RatFn x;
  RatFn y;
};

/// Rational points of a genus-one multisection, given as a marked quartic
/// curve w'^2 = q(t) with w = r(t) w', plus a generator on its Jacobian.
struct EllipticParametrization {
  QuarticModel<Rat> curve;
  Poly stripped;  // r(t)
  std::optional<Point<Rat>> generator;
};

/// The double cover w^2 = G(t) = F(t, p(t)) of the conic z = p(t) inside a
/// fibration built from a quartic source.
struct GraphOnQuartic {
  Poly p;
  std::optional<EllipticParametrization> elliptic;
};

struct SplitList {
  std::vector<Section> sections;
};

using MultisectionKind = std::variant<ZeroSection, ConstantX, Parametrized, GraphOnQuartic, SplitList>;

class Multisection {
 public:
  /// Validates the defining identities against `f` and computes the degree.
  /// Errors: PointNotOnCurve (identity fails), UnsupportedRepresentation
  /// (graph without quartic source), ZeroIntersection, InvalidArgument.
  Multisection(const FibrationModel& f, MultisectionKind kind);

  static Multisection zero_section(const FibrationModel& f) { return Multisection(f, ZeroSection{}); }

  const MultisectionKind& kind() const { return kind_; }
  int degree() const { return degree_; }
  std::string describe() const;

  /// G(t) = F(t, p(t)) for a GraphOnQuartic multisection.
  static Poly graph_polynomial(const QuarticSource& source, const Poly& p);

 private:
  MultisectionKind kind_;
  int degree_ = 1;
};

/// The 3-section {y = 0} of y^2 = x^3 + a x + b when a is constant and
/// b(t) is linear: parametrized by x = s with t solving x^3 + a x + b = 0.
/// Throws Error(UnsupportedRepresentation) for other shapes.
Multisection two_torsion_multisection(const FibrationModel& f);

}  // namespace ellfib
