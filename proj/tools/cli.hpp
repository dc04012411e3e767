#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace refgraph::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInputError = 1,   ///< unreadable or malformed input, unwritable output
  kConfigError = 2,  ///< bad flags or a selector that matches nothing
};

/// Runs the command line `args` (args[0] is the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace refgraph::cli
