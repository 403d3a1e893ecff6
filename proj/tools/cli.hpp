#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sepcode::cli {

/// Process exit statuses.
enum Exit : int {
  kOk = 0,
  kDoesNotHold = 1,
  kOverflow = 2,
  kUsage = 64,
  kParse = 65,
  kCannotCreate = 73,
};

/// Runs the command line `args` (args[0] is the program name). Reports go to
/// `out` unless --json names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sepcode::cli
