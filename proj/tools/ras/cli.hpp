#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ras::cli {

enum ExitCode : int {
  kOk = 0,
  kAssertFailed = 1,
  kUsageError = 2,
  kInternalError = 3,
};

/// Runs one invocation. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ras::cli
