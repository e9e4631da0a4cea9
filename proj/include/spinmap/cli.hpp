#pragma once

#include <ostream>

namespace spinmap::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Parses argv and runs one subcommand: inverse, roundtrip, reduce, derive,
/// solve, partition, free-energy, errata. Results go to `out` (or --output),
/// diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace spinmap::cli
