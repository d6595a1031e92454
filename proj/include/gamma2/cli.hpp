#pragma once

#include <iosfwd>

namespace gamma2 {

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv (argv[0] is the program name) and runs one subcommand:
/// bounds, minimize, ratio, sweep, heatflow, search or verify. Results go to
/// `out` unless --out names a file; diagnostics go to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gamma2
