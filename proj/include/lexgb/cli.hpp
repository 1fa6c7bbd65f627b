#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace lexgb {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitCheckFailed = 1, kExitUsage = 2 };

/// Runs the `lexgb` tool on `args` (args[0] is the program name). Output
/// files are written directly; messages go to `out` and `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lexgb
