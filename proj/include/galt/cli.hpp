#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace galt {

/// Exit codes of the command-line tool.
enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_malformed = 2 };

/// Runs one invocation; args excludes the program name. Reports go to `out`,
/// diagnostics (and the category check of `semidirect`) to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace galt
