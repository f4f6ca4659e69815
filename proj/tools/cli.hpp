#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kummer::cli {

/// Exit codes: 0 success, 1 usage or parse error, 2 domain error,
/// 3 verification failure.
enum ExitCode : int { kOk = 0, kUsage = 1, kDomain = 2, kVerifyFailed = 3 };

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Verification suites behind `verify`. Prints one line per check.
/// Returns kOk, kVerifyFailed, or kUsage for an unknown suite name.
int run_verify(const std::string& suite, unsigned long long seed, std::ostream& out, std::ostream& err);

}  // namespace kummer::cli
