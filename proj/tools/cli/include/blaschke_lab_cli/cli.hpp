#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace blaschke_lab::cli {

enum ExitCode : int {
  kOk = 0,
  kBatteryFailure = 1,
  kUsage = 2,
  kInvariant = 3,
};

/// Runs one command line (args excludes the program name). Reports go to
/// `out` unless redirected with -o; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace blaschke_lab::cli
