#pragma once

#include <iosfwd>

namespace morsecell {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitTrue = 0,
  kExitFalse = 1,
  kExitUsage = 2,
  kExitBudget = 3,
};

/// Runs the command line; the JSON report goes to `out`, the human summary
/// and diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace morsecell
