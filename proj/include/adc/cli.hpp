#pragma once

// Command-line front end. run_cli takes the arguments after the program
// name and returns what the process would print and its exit status.
//
// Exit codes: 0 success, 1 usage error, 2 parse error, 3 missing binding,
// 4 unsupported primitive for the chosen scalar, 5 invalid bench request.

#include <string>
#include <vector>

namespace adc {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitParse = 2,
  kExitMissingBinding = 3,
  kExitCapability = 4,
  kExitBench = 5,
};

struct CliResult {
  int exit_code = kExitOk;
  std::string out;
  std::string err;
};

CliResult run_cli(const std::vector<std::string>& args);

}  // namespace adc
