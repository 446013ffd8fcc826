#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace reptri::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kAbsent = 1;
inline constexpr int kUsageError = 2;
inline constexpr int kTheoremViolation = 3;

/// Runs the command line `args` (args[0] is the program name). Records go
/// to `out`, diagnostics and help to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace reptri::cli
