#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qpflow::cli {

enum ExitCode { kSuccess = 0, kNegative = 1, kUsage = 2 };

// Runs the command line `args` (without the program name).  Reports go to
// `out`, diagnostics to `err`.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

}  // namespace qpflow::cli
