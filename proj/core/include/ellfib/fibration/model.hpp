#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ellfib/elliptic/curve.hpp"
#include "ellfib/elliptic/quartic.hpp"
#include "ellfib/exactmath/numfield.hpp"
#include "ellfib/exactmath/ratfn.hpp"

namespace ellfib {

/// w^2 = q4 z^4 + ... + q0 with q_i in Q[t] and q4 a nonzero constant whose
/// square root `branch` marks the point at infinity of every fiber.
struct QuarticSource {
  std::array<Poly, 5> q;
  Rat branch;
};

struct SingularFiber {
  Rat b;
  friend bool operator==(const SingularFiber&, const SingularFiber&) = default;
};

/// y^2 = x^3 + a(t) x + b(t) over Q(t).
class FibrationModel {
 public:
  /// Throws Error(SingularCurve) when the discriminant vanishes identically.
  FibrationModel(RatFn a, RatFn b);

  /// Weierstrass model of a quartic family, marked at the infinity branch.
  static FibrationModel from_quartic(const QuarticSource& source);

  const RatFn& a() const { return a_; }
  const RatFn& b() const { return b_; }
  /// -16 (4a^3 + 27b^2).
  const RatFn& discriminant() const { return disc_; }
  /// Rational roots of the discriminant and rational poles of a, b; sorted.
  const std::vector<Rat>& singular_parameters() const { return singular_; }

  bool has_pole_at(const Rat& t) const { return a_.has_pole_at(t) || b_.has_pole_at(t); }
  /// True when t is neither a pole nor a root of the discriminant.
  bool is_smooth_at(const Rat& t) const;
  /// Discriminant at an algebraic parameter; nullopt at a pole.
  std::optional<NfElem> discriminant_at(const NfElem& t) const;

  /// Throws Error(PoleAtParameter) at a pole of a or b.
  std::variant<EllipticCurve<Rat>, SingularFiber> specialize(const Rat& t) const;
  /// The smooth fiber, or Error(SingularFiberSkip).
  EllipticCurve<Rat> smooth_fiber(const Rat& t) const;
  EllipticCurve<RatFn> generic_fiber() const { return EllipticCurve<RatFn>(a_, b_); }

  /// Model in s = 1/t: a(1/s) s^(4k), b(1/s) s^(6k) with the least k >= 0
  /// making both regular at s = 0.
  FibrationModel chart_at_infinity() const;
  int infinity_weight() const;

  const std::optional<QuarticSource>& quartic_source() const { return source_; }
  /// Reduction of the generic quartic fiber; needs a quartic source.
  QuarticReduction<RatFn> generic_reduction() const;
  /// Reduction of the quartic fiber at t over the field of `t`; the curve
  /// equals the specialized Weierstrass fiber.
  QuarticReduction<NfElem> fiber_reduction(const NfElem& t) const;

  /// Free-form provenance notes carried into reports.
  const std::vector<std::string>& provenance() const { return provenance_; }
  void add_provenance(std::string note) { provenance_.push_back(std::move(note)); }

  std::string describe() const;

 private:
  RatFn a_;
  RatFn b_;
  RatFn disc_;
  std::vector<Rat> singular_;
  std::optional<QuarticSource> source_;
  std::vector<std::string> provenance_;
};

/// Local data at a finite parameter.
struct FiberType {
  Rat b;
  int ord_delta;
  std::optional<int> ord_c4;  // nullopt when c4 vanishes identically
  std::string label;          // I0, I1, II or Other
  std::optional<bool> irreducible;

  /// "b=0: ordΔ=2, II, irreducible"
  std::string describe() const;
};

/// Throws Error(PoleAtParameter).
FiberType fiber_type(const FibrationModel& f, const Rat& b);

EllipticCurve<NfElem> to_nf(const EllipticCurve<Rat>& e);
Point<NfElem> to_nf(const Point<Rat>& p);
/// Throws Error(Internal) when a coordinate is irrational.
Point<Rat> to_rational(const Point<NfElem>& p);

}  // namespace ellfib
