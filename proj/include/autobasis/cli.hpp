#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace autobasis {

enum ExitCode : int {
    kExitDecided = 0,
    kExitUsage = 1,
    kExitInconclusive = 2,
    kExitPrecondition = 3,
};

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace autobasis
