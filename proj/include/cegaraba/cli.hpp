#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace cegaraba {

enum ExitCode : int { kExitOk = 0, kExitUsage = 1, kExitInput = 2 };

/// Runs one command line (without the program name). Answers go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cegaraba
