#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace milnorforge::cli {

enum ExitCode : int {
  kSuccess = 0,
  kDomainError = 1,
  kUsageError = 2,
};

// Runs one command. `args` excludes the program name. Reports go to `out`
// (or the --output file); diagnostics and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace milnorforge::cli
