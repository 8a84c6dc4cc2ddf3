#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mcgcoh::cli {

/// Exit codes shared by every command.
enum ExitCode : int {
  ok = 0,
  input_error = 1,
  unsupported = 2,
  semantic_failure = 3,
};

/// Runs one command; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mcgcoh::cli
