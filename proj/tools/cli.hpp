#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace nscp::cli {

enum ExitCode : int {
  kSuccess = 0,
  kValidationError = 2,
  kNotConverged = 3,
};

/// Runs one command line (args[0] is the program name). Tables go to `out`
/// unless -o is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nscp::cli
