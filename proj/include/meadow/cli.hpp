#ifndef MEADOW_CLI_HPP
#define MEADOW_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

namespace meadow {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,       // bad flag, parse error, unreadable file
  kExitEvaluation = 2,  // unbound variable, quantifier over the rationals
  kExitThirdValue = 3,  // UNDEFINED, U, UNUSABLE, or an UNKNOWN lint verdict
  kExitFailure = 4,     // lint violation or failed axiom
};

/// Runs the `meadow` command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace meadow

#endif
