#pragma once

#include <iosfwd>

namespace thermocone::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

// Entry point of the `thermocone` tool. Results go to `out` (or the --out
// file), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace thermocone::cli
