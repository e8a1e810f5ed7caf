#pragma once

#include <ostream>

namespace sprad {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolations = 1,
  kExitInputError = 2,
  kExitNoConvergence = 3,
};

/// Entry point behind the `sprad` executable; streams are injected for tests.
/// Errors are written to `err` as {"error": {"code", "message", "line"?}}.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace sprad
