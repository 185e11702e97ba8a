#pragma once

#include <string>
#include <vector>

namespace torelli {

struct CommandResult {
  int exit_code = 0; // 0 success, 1 domain error, 2 usage error
  std::string output;
};

// Runs one CLI command (arguments without the program name) and returns
// the exit code plus the full report text.  With --json the report is a
// deterministic machine-readable object; there is no ambient state and no
// timestamps.
CommandResult run_command(const std::vector<std::string> &args);

} // namespace torelli
