#pragma once

#include <ostream>
#include <span>
#include <string>

namespace g2::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerifyFailed = 2;

/// Parses `args` (without the program name), runs the subcommand and writes
/// results to `out` and diagnostics to `err`. Returns the process exit code.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace g2::cli
