#pragma once

#include <iosfwd>

namespace superflow {

/// Exit codes of the command-line front end.
enum ExitCode : int { exit_pass = 0, exit_verification_failure = 1, exit_usage = 2 };

/// Parses argv (argv[0] is the program name) and runs one subcommand.
/// Reports go to out; usage and error messages go to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace superflow
