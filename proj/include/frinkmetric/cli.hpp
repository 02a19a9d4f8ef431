#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace frinkmetric::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadInput = 2,
  kNumericFailure = 3,
};

/// Runs one CLI invocation. args[0] is the program name. Data goes to files
/// (or `out` when no output path is given); diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace frinkmetric::cli
