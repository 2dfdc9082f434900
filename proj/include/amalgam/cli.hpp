#pragma once

#include <optional>
#include <string>
#include <vector>

#include "amalgam/json_io.hpp"

namespace amalgam {

enum ExitStatus : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitInputError = 2,
  kExitUnsupported = 3,
};

/// Exit status the CLI reports for a library error of this kind.
int exit_status_for(ErrorKind kind);

struct CommandResult {
  /// Report document; empty when `help` is set.
  Json report;
  int exit_status = kExitOk;
  /// Destination requested with --out; stdout otherwise.
  std::optional<std::string> out;
  /// Usage text for --help.
  std::optional<std::string> help;
};

/// Executes one CLI invocation. `args` excludes the program name. Never
/// throws on bad input: every failure is described in the report.
CommandResult run_command(const std::vector<std::string>& args);

/// Report text as written by the CLI (two-space indented JSON plus newline).
std::string render_report(const Json& report);

}  // namespace amalgam
