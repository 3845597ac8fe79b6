#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace planembed {

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitInputError = 2,
  kExitInternalError = 3,
};

/// Runs one command line (without the program name). Results go to `out`
/// unless an output path is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace planembed
