#pragma once

#include <string>
#include <vector>

namespace rackcolor::cli {

/// 0: success or positive verdict; 1: negative mathematical verdict
/// (not a rack, not bijective, inconsistent numbering); 2: bad input or usage.
struct CommandResult {
  int exit_code = 0;
  std::string output;  // stdout
  std::string error;   // stderr
};

/// Runs one command; `args` excludes the program name.
CommandResult dispatch(const std::vector<std::string>& args);

}  // namespace rackcolor::cli
