#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lobekit {

/// Exit codes of run_cli.
enum ExitCode : int {
  kExitOk = 0,
  kExitNegative = 1,  // equiv / iso answered "no"
  kExitUsage = 2,
  kExitInput = 3,
  kExitResource = 4,
};

/// Runs one command line. `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lobekit
