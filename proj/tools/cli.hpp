#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgraph::cli {

enum ExitCode : int { kOk = 0, kConfigError = 1, kSolverError = 2, kCheckFailure = 3 };

/// Runs the command line `args` (args[0] is the program name) and returns the
/// process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hgraph::cli
