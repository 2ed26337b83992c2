#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ellfib/cli/commands.hpp"
#include "ellfib/error.hpp"

namespace {

using namespace ellfib::cli;

int report(const Diagnostic& d, const std::string& source, int status) {
  std::cerr << d.render(source) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact density experiments on elliptic fibrations"};
  std::string command;
  std::string spec_path;
  std::optional<std::string> out_dir;
  std::optional<unsigned> threads;
  std::optional<unsigned long> height_bound;
  std::optional<int> k_max;
  std::optional<int> torsion_bound;
  std::optional<int> m_max;
  app.add_option("command", command,
                 "analyze | densify | probe | enriques-restrict | enriques-bitangents | enriques-model")
      ->required();
  app.add_option("spec", spec_path, "JSON spec file")->required();
  app.add_option("--out", out_dir, "output directory (overrides output.dir)");
  app.add_option("--threads", threads, "worker threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--height-bound", height_bound, "height bound for base points")->check(CLI::PositiveNumber);
  app.add_option("--k-max", k_max, "largest multiple of tau to emit")->check(CLI::NonNegativeNumber);
  app.add_option("--torsion-bound", torsion_bound, "torsion certification bound")->check(CLI::PositiveNumber);
  app.add_option("--m-max", m_max, "largest order tried by probe")->check(CLI::PositiveNumber);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  const auto cmd = parse_command(command);
  if (!cmd) {
    std::cerr << "unknown command '" << command << "'\n";
    return kExitValidation;
  }
  std::ifstream in(spec_path, std::ios::binary);
  if (!in) {
    std::cerr << spec_path << ": cannot open\n";
    return kExitValidation;
  }
  std::stringstream text;
  text << in.rdbuf();

  RunSpec spec;
  try {
    spec = parse_spec(text.str());
    if (out_dir) spec.out_dir = *out_dir;
    if (threads) spec.params.threads = *threads;
    if (height_bound) spec.params.height_bound = *height_bound;
    if (k_max) spec.params.k_max = *k_max;
    if (m_max) spec.params.m_max = *m_max;
    if (torsion_bound) {
      spec.params.torsion_bound = *torsion_bound;
      if (*torsion_bound < ellfib::kTorsionBoundRational && !spec.params.override_bound) {
        throw SpecError(Diagnostic{Diagnostic::Kind::Validation, "--torsion-bound", 0, 0,
                                   "below the uniform bound over Q; set params.override_bound to accept it"});
      }
    }
  } catch (const SpecError& e) {
    return report(e.diagnostic(), spec_path, kExitValidation);
  }

  try {
    const auto result = run_command(*cmd, spec);
    write_artifacts(result, spec.out_dir);
    for (const auto& line : result.summary) std::cout << line << "\n";
    for (const auto& d : result.diagnostics) report(d, spec_path, result.status);
    return result.status;
  } catch (const SpecError& e) {
    return report(e.diagnostic(), spec_path, kExitValidation);
  } catch (const ellfib::Error& e) {
    return report(Diagnostic{Diagnostic::Kind::Computation, "", 0, 0, e.what()}, spec_path, kExitComputation);
  } catch (const std::exception& e) {
    return report(Diagnostic{Diagnostic::Kind::Computation, "", 0, 0, e.what()}, spec_path, kExitComputation);
  }
}
