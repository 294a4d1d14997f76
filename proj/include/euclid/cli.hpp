#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace euclid {

/// Process exit codes of the euclid-lab front end.
enum ExitCode : int {
  kExitOk = 0,            // success / verified
  kExitFinding = 1,       // violation, decomposition failure, search survivor
  kExitUsage = 2,         // usage, parse or validation error
  kExitInconclusive = 3,  // skipped pairs, UpperBound values, incomplete search
};

/// Runs one command line (without the program name). Reports go to `out`,
/// diagnostics (structured JSON objects) to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace euclid
