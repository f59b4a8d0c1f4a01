#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace twist::cli {

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;      // a check ran and did not hold
inline constexpr int kExitNotFibred = 2;
inline constexpr int kExitInconclusive = 3;
inline constexpr int kExitUsage = 64;       // bad arguments or malformed input
inline constexpr int kExitSizeCap = 65;

/// Runs `twist` with argv-style arguments (args[0] is the program name).
/// Output is deterministic for fixed inputs.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace twist::cli
