#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cubeladder::cli {

inline constexpr const char* version = "0.1.0";

/// Exit codes: 0 success, 1 verification failure or empty sample,
/// 2 usage or input error.
enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Runs the command line `args` (without the program name). Data goes to
/// `out` unless --out names a file; summaries and diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cubeladder::cli
