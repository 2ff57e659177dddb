#ifndef FPMOM_TOOLS_CLI_HPP_
#define FPMOM_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace fpmom::cli {

// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceLimit = 3,
};

// Runs one command. args excludes the program name. Data goes to `out`,
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fpmom::cli

#endif  // FPMOM_TOOLS_CLI_HPP_
