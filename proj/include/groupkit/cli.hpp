#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace groupkit {

/// Exit-status contract: 0 = condition holds / all checks pass,
/// 1 = condition definitively fails, >= 2 = operational error.
enum ExitCode : int {
  kExitHolds = 0,
  kExitFails = 1,
  kExitError = 2,
};

/// Runs one CLI invocation (args exclude the program name). All report
/// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace groupkit
