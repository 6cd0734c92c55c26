#pragma once

// Command-line front end: figure-style CSV generators, the Monte Carlo
// driver and the validation suite.

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace sgcov::cli {

inline constexpr std::string_view kVersion = "1.0.0";

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsageError = 2 };

/// Runs one invocation. `args` excludes the program name. CSV and reports go
/// to `out` unless --out names a file; manifests and progress go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Shortest round-trip decimal form, independent of the global locale.
std::string format_number(double value);

}  // namespace sgcov::cli
