#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace levelplan {

// Exit codes of the levelplan command.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,  // not planar, embedding failed, or crossings found
  kExitUsage = 2,
  kExitMalformed = 3,
  kExitBudget = 4,
};

// Runs one levelplan command. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace levelplan
