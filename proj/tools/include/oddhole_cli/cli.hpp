#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace oddhole::cli {

enum ExitCode : int {
    kOk = 0,
    kViolation = 1,
    kInputError = 2,
    kBudget = 3,
};

/// Runs the command line `args` (args[0] is the program name) against the
/// given streams and returns the process exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace oddhole::cli
