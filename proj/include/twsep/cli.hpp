#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace twsep {

// Exit codes shared by every subcommand.
enum ExitCode : int {
  kExitOk = 0,
  kExitInvalid = 1,   // validate found violations
  kExitFormat = 2,    // unreadable or malformed input, bad flags
  kExitSemantic = 3,  // well-formed input the operation cannot use
};

// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twsep
