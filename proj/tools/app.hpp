#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace k3fm::cli {

enum ExitCode : int { kOk = 0, kParseError = 1, kDomainError = 2, kVerificationFailed = 3 };

/// Runs one command line. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace k3fm::cli
