#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace altpath {

enum ExitCode { kExitOk = 0, kExitVerifyFailed = 1, kExitInvalidInput = 2, kExitInternal = 3 };

/// Runs the command line with `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace altpath
