#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace tuttekit::cli {

enum ExitCode : int {
    kOk = 0,
    kFailure = 1,
    kMismatch = 2,
    kCapacity = 3,
    kUsage = 4,
};

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace tuttekit::cli
