#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace specomm::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kDataError = 2,
  kAlgorithmError = 3,
  kBenchmarkMismatch = 4,
};

/// Runs the command line `args` (without the program name) and returns the
/// process exit status. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace specomm::cli
