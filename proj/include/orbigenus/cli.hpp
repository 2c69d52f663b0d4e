#pragma once

#include <iosfwd>

namespace orbigenus {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_mismatch = 1, exit_usage = 2 };

/// Runs the command-line tool: results go to `out`, diagnostics to `err`.
/// Returns the process exit code.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace orbigenus
