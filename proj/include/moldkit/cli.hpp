#pragma once

#include <string>
#include <vector>

namespace moldkit::cli {

struct CommandResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Runs one CLI invocation. args excludes the program name. Exit codes:
/// 0 success, 1 domain error, 2 usage error.
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace moldkit::cli
