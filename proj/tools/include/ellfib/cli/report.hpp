#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ellfib/cli/spec.hpp"
#include "ellfib/density/density.hpp"

namespace ellfib::cli {

/// Counters and per-fiber certificates. The emitted points live in the CSV.
Json density_report_json(const DensityReport& r);
/// Inverse of density_report_json; `points` is left empty.
DensityReport density_report_from_json(const Json& j);

/// Header "b,x,y,k", one exact row per point, "\n" line endings.
std::string points_csv(const std::vector<EmittedPoint>& points);
/// Throws SpecError (with the 1-based line) on malformed rows.
std::vector<EmittedPoint> points_from_csv(std::string_view text);

CertificationVerdict parse_verdict(std::string_view text);

bool same_counters(const DensityReport& a, const DensityReport& b);

}  // namespace ellfib::cli
