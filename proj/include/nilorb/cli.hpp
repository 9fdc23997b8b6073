#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nilorb::cli {

/// Exit-code contract shared by every subcommand.
enum ExitCode : int {
    kSuccess = 0,
    kVerificationFailed = 1,
    kUsageError = 2,
    kInternalError = 3,
};

/// Runs the command line `args` (without the program name), writing payloads
/// to `out` and diagnostics to `err`. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace nilorb::cli
