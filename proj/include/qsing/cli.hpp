#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace qsing::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kDomainError = 3,
};

/// Runs one subcommand. args excludes the program name. Reports go to out;
/// failures write a single "error: <kind>: <reason>" line to err.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace qsing::cli
