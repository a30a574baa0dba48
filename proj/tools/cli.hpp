#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace rblab::cli {

enum ExitCode : int {
  kOk = 0,
  kRainbowFound = 1,
  kConfigError = 2,
  kResourceLimit = 3,
  kViolation = 4,
};

/// Runs one invocation; `args` excludes the program name. The report goes
/// to `out` only for exit codes 0, 1 and 4; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rblab::cli
