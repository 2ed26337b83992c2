#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ellfib/elliptic/torsion.hpp"
#include "ellfib/enriques/cone.hpp"
#include "ellfib/fibration/multisection.hpp"

namespace ellfib::cli {

using Json = nlohmann::ordered_json;

/// A user-facing problem with a run. Syntax errors carry a line and column,
/// validation errors a JSON-pointer-like field path.
struct Diagnostic {
  enum class Kind { Syntax, Validation, Computation };
  Kind kind = Kind::Validation;
  std::string field;  // "/fibration/a/num/1"; empty for syntax errors
  int line = 0;       // 1-based, syntax errors only
  int column = 0;
  std::string message;

  std::string render(std::string_view source = {}) const;
};

class SpecError : public std::runtime_error {
 public:
  explicit SpecError(Diagnostic d) : std::runtime_error(d.render()), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct Params {
  unsigned long height_bound = 10;
  int k_max = 5;
  int torsion_bound = kTorsionBoundRational;
  bool override_bound = false;
  int m_max = 18;
  /// Fibers for probe and the enriques model checks; empty means the
  /// smooth parameters of height <= height_bound.
  std::vector<Rat> samples;
  unsigned threads = 1;
};

struct BitangentQuery {
  Rat t0;
  Rat z0;
  std::optional<std::pair<Rat, Rat>> through;
};

struct RunSpec {
  std::optional<FibrationModel> fibration;
  /// One multisection, or a family when `family` is set.
  std::vector<Multisection> multisections;
  bool family = false;

  std::optional<ConeQuartic> cone;
  std::vector<BitangentQuery> points;
  /// Rational sections z = c0 + c1 t + c2 t^2 whose double covers are examined.
  std::vector<SectionConic> sections;
  bool allow_quadratic_extension = false;

  Params params;
  std::string out_dir = "out";
};

/// Parses and validates a spec document. Throws SpecError.
RunSpec parse_spec(std::string_view text);

/// Canonical document for a spec; parse_spec(to_json(s).dump()) == s.
Json to_json(const RunSpec& spec);

/// Structural equality through the canonical document.
bool operator==(const RunSpec& a, const RunSpec& b);

// Value codecs shared with the report writers.
Json rat_json(const Rat& r);
Json poly_json(const Poly& p);
Json ratfn_json(const RatFn& f);
Json point_json(const Point<Rat>& p);
Json nf_json(const NfElem& e);
/// "Q" or {"minpoly": "a^2 - 2"}.
Json field_json(const FieldPtr& field);

/// Readers with field-path diagnostics. `path` names `j` in messages.
Rat read_rat(const Json& j, const std::string& path);
Poly read_poly(const Json& j, const std::string& path);
RatFn read_ratfn(const Json& j, const std::string& path);
Point<Rat> read_point(const Json& j, const std::string& path);

}  // namespace ellfib::cli
