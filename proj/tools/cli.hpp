#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rootlace::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  kOk = 0,
  kPropertyFailure = 1,  // not real-rooted, hypothesis violated, fuzz failure
  kInputError = 2,
  kInternalContradiction = 3,
};

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootlace::cli
