#ifndef SPHPLANKS_CLI_HPP
#define SPHPLANKS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace sphplanks {

/// Exit codes of the command-line tool.
enum ExitCode : int { kExitOk = 0, kExitFail = 1, kExitInvalid = 2 };

/// Runs one command. `args` excludes the program name. Reports go to `out`,
/// diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sphplanks

#endif  // SPHPLANKS_CLI_HPP
