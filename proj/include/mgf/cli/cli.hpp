#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mgf::cli {

// Stable exit codes.
enum ExitCode : int {
    ok = 0,
    usage = 2,
    guard = 3,
    unconverged = 4,
    violation = 5,
};

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mgf::cli
