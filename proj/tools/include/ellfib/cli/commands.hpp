#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ellfib/cli/spec.hpp"

namespace ellfib::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 2;
inline constexpr int kExitComputation = 3;

enum class Command { Analyze, Densify, Probe, EnriquesRestrict, EnriquesBitangents, EnriquesModel };

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command c);

struct Artifact {
  std::string name;  // file name inside the output directory
  std::string content;
};

struct CommandResult {
  int status = kExitOk;
  std::vector<Artifact> artifacts;
  /// Human-readable lines for stdout.
  std::vector<std::string> summary;
  /// Failures that did not stop the run (e.g. one bitangent search).
  std::vector<Diagnostic> diagnostics;
};

/// Runs a pipeline in memory. Artifacts are byte-identical for equal specs
/// whatever the thread count. Throws SpecError when the spec lacks what the
/// command needs; library errors propagate as ellfib::Error.
CommandResult run_command(Command c, const RunSpec& spec);

void write_artifacts(const CommandResult& result, const std::filesystem::path& dir);

/// Smooth fibers to sample: spec.params.samples, or every smooth parameter of
/// height <= height_bound.
std::vector<Rat> sample_parameters(const FibrationModel& f, const Params& p);

}  // namespace ellfib::cli
