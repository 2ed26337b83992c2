#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ellfib {

enum class Errc {
  // exactmath
  BothZero,
  ZeroInput,
  DivisionByZero,
  FieldMismatch,
  NotIrreducible,
  ParseError,
  // elliptic
  SingularCurve,
  PointNotOnCurve,
  BoundTooSmall,
  NotSquarefree,
  NoMarkedPoint,
  // fibration
  PoleAtParameter,
  SingularFiberSkip,
  TraceFieldTooLarge,
  EmptySampleSet,
  UnsupportedRepresentation,
  // density
  NoGeneratorSupplied,
  EmptyFamily,
  // enriques
  VertexOnQuartic,
  NonReducedRamification,
  NotOnR,
  NotInR0,
  DegenerateDiscriminant,
  NoCandidates,
  ZeroIntersection,
  LeadingCoefficientNotSquare,
  // generic
  InvalidArgument,
  Internal,
};

std::string_view to_string(Errc code) noexcept;

/// Exception carrying a machine-readable error code. Every failure raised by
/// the library goes through this type so callers can map codes to exit
/// statuses without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace ellfib
