#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace htoric::cli {

enum class Command { Analyze, Inertia, ChowRing, OrbifoldTable, Verify, ChartCheck, SreCheck };
enum class Format { Json, Text };

std::optional<Command> parse_command(const std::string& name);
std::string to_string(Command c);

struct RunConfig {
  std::string input;
  Command command = Command::Analyze;
  unsigned degree = 4;
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  Format format = Format::Json;
};

enum ExitCode : int { kSuccess = 0, kVerificationFailure = 1, kInputError = 2 };

/// Runs one subcommand. Reports go to `out`; in text mode errors go to `err`,
/// in JSON mode they are written to `out` as {"error": {...}}.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Structured error report for failures that happen before `run` (flag parsing).
void write_error(std::ostream& out, Format format, const std::string& kind, const std::string& message);

}  // namespace htoric::cli
