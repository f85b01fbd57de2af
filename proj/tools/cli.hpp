#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nestcraig::cli {

enum ExitCode : int {
  kOk = 0,
  kNotProved = 1,
  kUsage = 2,
  kInternal = 3,
};

/// Runs one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nestcraig::cli
