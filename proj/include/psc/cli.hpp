#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace psc {

enum ExitCode : int { exit_pass = 0, exit_verification_failed = 1, exit_usage = 2 };

/// Runs one `psc` subcommand. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace psc
