#pragma once

#include <iosfwd>

namespace jred {

enum ExitCode : int { exit_ok = 0, exit_config_error = 1, exit_invariant_violation = 2 };

/// Entry point of the jacobi_reduce tool: `reduce` and `check-algebra` subcommands.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace jred
