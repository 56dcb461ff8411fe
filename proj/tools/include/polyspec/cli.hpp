#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

#include "polyspec/graph.hpp"

namespace polyspec::cli {

enum class Command { Transform, Spectrum, Invariants, Verify, Lift };
enum class Format { Json, Csv };

inline constexpr std::size_t kDefaultOracleCap = 2000;

struct RunConfig {
  Command command = Command::Spectrum;
  /// Edge list, or "-" for standard input. `spectrum` also accepts a JSON
  /// spectrum written by an earlier run.
  std::string input_path;
  int n = 2;
  int g = 1;
  double tolerance = 1e-8;
  Format output_format = Format::Json;
  std::size_t explicit_cap = kDefaultExplicitCap;
  bool exact_mode = false;
  /// `lift` only: JSON file {"lambda": x, "vector": [...], "mu": y}; mu optional.
  std::string eigenpair_path;
  /// `verify` only: largest explicit graph handed to the dense eigensolver.
  std::size_t oracle_cap = kDefaultOracleCap;
};

enum ExitCode : int {
  kExitOk = 0,
  kExitInput = 1,
  kExitCap = 2,
  kExitMismatch = 3,
};

/// Runs one command, writing the report to `out` and diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to run().
int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace polyspec::cli
