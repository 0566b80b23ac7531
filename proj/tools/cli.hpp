#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lcb::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
    kClean = 0,
    kFindings = 1,
    kUsage = 2,
    kInvariantBreach = 3,
};

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace lcb::cli
