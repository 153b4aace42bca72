#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace segner {

/// Process exit codes.
enum ExitCode : int {
    kExitOk = 0,         // success / verified
    kExitFalsified = 1,  // a check failed or a claim was falsified
    kExitUsage = 2,      // bad arguments or a resource cap was hit
};

/// Runs the command line `args` (without the program name). Results go to
/// `out` unless --output names a file; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace segner
