#include "ellfib/error.hpp"

namespace ellfib {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::BothZero: return "BothZero";
    case Errc::ZeroInput: return "ZeroInput";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::NotIrreducible: return "NotIrreducible";
    case Errc::ParseError: return "ParseError";
    case Errc::SingularCurve: return "SingularCurve";
    case Errc::PointNotOnCurve: return "PointNotOnCurve";
    case Errc::BoundTooSmall: return "BoundTooSmall";
    case Errc::NotSquarefree: return "NotSquarefree";
    case Errc::NoMarkedPoint: return "NoMarkedPoint";
    case Errc::PoleAtParameter: return "PoleAtParameter";
    case Errc::SingularFiberSkip: return "SingularFiberSkip";
    case Errc::TraceFieldTooLarge: return "TraceFieldTooLarge";
    case Errc::EmptySampleSet: return "EmptySampleSet";
    case Errc::UnsupportedRepresentation: return "UnsupportedRepresentation";
    case Errc::NoGeneratorSupplied: return "NoGeneratorSupplied";
    case Errc::EmptyFamily: return "EmptyFamily";
    case Errc::VertexOnQuartic: return "VertexOnQuartic";
    case Errc::NonReducedRamification: return "NonReducedRamification";
    case Errc::NotOnR: return "NotOnR";
    case Errc::NotInR0: return "NotInR0";
    case Errc::DegenerateDiscriminant: return "DegenerateDiscriminant";
    case Errc::NoCandidates: return "NoCandidates";
    case Errc::ZeroIntersection: return "ZeroIntersection";
    case Errc::LeadingCoefficientNotSquare: return "LeadingCoefficientNotSquare";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace ellfib
