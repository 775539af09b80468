#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace screwalg::cli {

enum ExitCode : int {
  kOk = 0,
  kResidualFailure = 1,
  kUsage = 2,
  kPrecondition = 3,
};

/// Runs the command line `screwalg <args...>`; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace screwalg::cli
