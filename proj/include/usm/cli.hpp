#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace usm {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitUsage = 2, kExitResource = 3, kExitInvariant = 4 };

/// Runs one command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace usm
