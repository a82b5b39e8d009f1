#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace heatcoef::cli {

/// Exit codes of `heatcoef`.
enum ExitCode : int {
  kOk = 0,
  kDomainError = 1,         // invalid argument, cotangent case, internal inconsistency
  kUsageError = 2,          // unparseable command line or config file
  kVerificationFailed = 3,  // failed criterion or exhausted precision
};

/// Runs one command. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace heatcoef::cli
