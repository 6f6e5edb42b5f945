#ifndef ALC_CLI_HPP
#define ALC_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace alc {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitYes = 0,        // SAT / consistent / YES
  kExitNo = 1,         // UNSAT / inconsistent / NO
  kExitUsage = 2,      // parse or usage error
  kExitInvariant = 3,  // internal invariant violation
  kExitLimit = 4,      // step limit or oracle ceiling
};

// Runs the tool on `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace alc

#endif  // ALC_CLI_HPP
