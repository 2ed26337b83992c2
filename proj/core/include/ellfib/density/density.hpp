#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "ellfib/elliptic/torsion.hpp"
#include "ellfib/fibration/cycle.hpp"

namespace ellfib {

struct MultisectionPoint {
  Rat b;
  Point<Rat> p;
};

/// Rational points of M with parameter height <= height_bound, in
/// enumeration order. Elliptic graph multisections contribute k * generator
/// for |k| <= height_bound.
/// Errors: NoGeneratorSupplied, UnsupportedRepresentation.
std::vector<MultisectionPoint> enumerate_multisection_points(const FibrationModel& f, const Multisection& m,
                                                             unsigned long height_bound);

struct Skipped {
  std::string reason;
  friend bool operator==(const Skipped&, const Skipped&) = default;
};
/// InfiniteOrder is the non-torsion certificate.
using CertificationVerdict = std::variant<InfiniteOrder, Torsion, Skipped>;
std::string to_string(const CertificationVerdict& v);

struct CertificationResult {
  Rat b;
  Point<Rat> base;
  Point<Rat> tau;  // infinity when skipped
  CertificationVerdict verdict;
  /// p + k tau for k = 0..k_max when certified, only p otherwise, empty when
  /// skipped. Index is k.
  std::vector<Point<Rat>> points;

  bool certified() const { return std::holds_alternative<InfiniteOrder>(verdict); }
};

/// Singular fibers, poles and oversized trace fields come back as Skipped.
/// Throws PointNotOnCurve when p is not on the fiber or not on M over b, and
/// BoundTooSmall for a bound below 12 without override.
CertificationResult certify_and_translate(const FibrationModel& f, const Multisection& m, const Rat& b,
                                          const Point<Rat>& p, int k_max, int torsion_bound = kTorsionBoundRational,
                                          bool override_bound = false);

struct DensifyParams {
  unsigned long height_bound = 10;
  int k_max = 5;
  int torsion_bound = kTorsionBoundRational;
  bool override_bound = false;
  unsigned threads = 1;
};

struct EmittedPoint {
  Rat b;
  Rat x;
  Rat y;
  int k;
};

struct DensityReport {
  /// Distinct fiber parameters tried, and those with a certified base point.
  int fibers_attempted = 0;
  int fibers_certified = 0;
  /// Per base point; several base points may share a fiber.
  int base_points_attempted = 0;
  int base_points_certified = 0;
  int base_points_torsion = 0;
  int base_points_skipped = 0;
  /// Pairwise distinct (b, x, y), each re-verified on its fiber.
  int points_emitted = 0;
  Integer max_height_seen = 0;
  /// Sorted by fiber parameter, ties in enumeration order.
  std::vector<CertificationResult> fibers;
  /// Distinct points in report order, first occurrence kept.
  std::vector<EmittedPoint> points;
};

/// Deterministic for any thread count.
DensityReport densify(const FibrationModel& f, const Multisection& m, const DensifyParams& params);

struct FamilyChoice {
  std::size_t index;
  DensityReport report;
};
struct Exhausted {
  std::vector<DensityReport> reports;
};
using FamilyResult = std::variant<FamilyChoice, Exhausted>;

/// First member certifying at least one fiber. Error(EmptyFamily) on an
/// empty family.
FamilyResult family_strategy(const FibrationModel& f, std::span<const Multisection> family,
                             const DensifyParams& params);

}  // namespace ellfib
