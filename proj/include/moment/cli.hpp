#pragma once

#include <ostream>

namespace moment {

/// Exit codes of the command-line front end.
enum ExitCode : int { kSuccess = 0, kInputError = 1, kBudgetExceeded = 2, kInvariantFailure = 3 };

/// Parses argv and runs one subcommand (syzygy, vino, bounds, ratio, verify), writing the
/// document to `out` (or --output) and diagnostics to `err`. Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace moment
