#pragma once

#include <iosfwd>

namespace rguard {

inline constexpr int kExitClean = 0;
inline constexpr int kExitDetection = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the `rguard` command. Output goes to `out`, diagnostics to `err`.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rguard
