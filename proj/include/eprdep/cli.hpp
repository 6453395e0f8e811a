#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace eprdep {

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitInternal = 1, kExitUsage = 2 };

/// Runs the CLI with `args` (excluding the program name). Normal output goes
/// to `out` unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eprdep
