#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace seqlrc {

enum ExitCode : int {
  kExitOk = 0,
  kExitFailures = 1,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitConstruction = 4,
};

/// Runs the command line `args` (without the program name). JSON and
/// reports go to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace seqlrc
