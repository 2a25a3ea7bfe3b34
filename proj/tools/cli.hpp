#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hypernet::cli {

enum ExitCode : int {
  kSuccess = 0,
  kInvalid = 1,
  kBudgetExceeded = 2,
  kEmptyResult = 3,
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hypernet::cli
