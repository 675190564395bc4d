#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sidon::cli {

enum ExitCode : int {
    kSuccess = 0,
    kDomainError = 1,
    kMalformedInput = 2,
};

/// Runs the command line `args` (program name excluded). Reports go to `out`, or to
/// the --out file when given; diagnostics go to `err`. A verdict of "not Sidon" is a
/// success.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sidon::cli
