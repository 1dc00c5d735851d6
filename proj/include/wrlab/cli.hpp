#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wrlab {

// Exit codes of the command-line front end.
enum ExitCode : int {
  kExitOk = 0,
  kExitDomain = 1,
  kExitResource = 2,
  kExitChecksFailed = 3,
  kExitUsage = 64,
  kExitInternal = 70,
};

// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wrlab
