#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ellfib/fibration/multisection.hpp"

namespace ellfib {

struct CyclePoint {
  Point<NfElem> point;
  int multiplicity;
};

/// M ∩ E_b with every point written over one common field (Q, quadratic or
/// biquadratic); conjugate points appear together.
struct ZeroCycle {
  Rat b;
  FieldPtr field;  // null for Q
  std::vector<CyclePoint> support;

  int degree() const;
  /// Support points with rational coordinates.
  std::vector<Point<Rat>> rational_points() const;
};

/// Group sum of a cycle; always rational.
struct TracePoint {
  Rat b;
  Point<Rat> value;
};

/// Errors: SingularFiberSkip, TraceFieldTooLarge, UnsupportedRepresentation.
ZeroCycle fiber_cycle(const FibrationModel& f, const Multisection& m, const Rat& b);
std::pair<ZeroCycle, TracePoint> trace_cycle(const FibrationModel& f, const Multisection& m, const Rat& b);

/// [d] p - Tr(b) on the smooth fiber at b.
/// Errors: SingularFiberSkip, TraceFieldTooLarge, PointNotOnCurve.
Point<Rat> tau_map(const FibrationModel& f, const Multisection& m, const Point<Rat>& p, const Rat& b);

/// Sample-level evidence that every difference of cycle points is killed by
/// `order`. Not a proof.
struct OrderEvidence {
  int order;
  int fibers;   // samples that contributed
  int skipped;  // singular samples ignored
};
/// A proof that no m <= m_max kills all differences, with the witness fiber.
struct NoOrderUpTo {
  int m_max;
  Rat witness;
};
using OrderVerdict = std::variant<OrderEvidence, NoOrderUpTo>;

/// Singular samples are skipped; Error(EmptySampleSet) when nothing usable
/// remains. TraceFieldTooLarge propagates.
OrderVerdict order_probe(const FibrationModel& f, const Multisection& m, std::span<const Rat> samples, int m_max);
std::string to_string(const OrderVerdict& v);

struct RamificationPoint {
  NfElem b;                            // rational or quadratic parameter
  std::optional<Point<NfElem>> point;  // on the fiber, when it is smooth
  int multiplicity;                    // ramification index or contact order
  bool salient;                        // discriminant nonzero at b
  std::string kind;                    // "branch" or "tangency"
};

struct RamificationReport {
  std::vector<RamificationPoint> points;
  /// Total degree of parameters living in fields of degree > 2.
  int unresolved_degree = 0;
  /// How many of those lie over smooth fibers.
  int unresolved_salient = 0;

  bool any_salient() const;
};

/// Finite ramification of M -> P^1 in fields of degree <= 2: roots of
/// h(t) = c^3 + a c + b for ConstantX, of dt/ds for Parametrized (plus
/// s = infinity), of G(t) for GraphOnQuartic. ZeroSection and SplitList are
/// unramified and give an empty report.
RamificationReport ramification_points(const FibrationModel& f, const Multisection& m);

struct NonTorsion {
  Rat witness;
};
struct TorsionEvidence {
  int order;
  int fibers;
};
using DifferenceVerdict = std::variant<NonTorsion, TorsionEvidence>;

/// Orders of s1 - s2 on the sampled smooth fibers. InfiniteOrder on one
/// fiber, or two fibers disagreeing on the order, proves non-torsion
/// (a torsion section specializes injectively to smooth fibers).
DifferenceVerdict section_difference_order(const FibrationModel& f, const Section& s1, const Section& s2,
                                           std::span<const Rat> samples, int bound = 12);
std::string to_string(const DifferenceVerdict& v);

}  // namespace ellfib
