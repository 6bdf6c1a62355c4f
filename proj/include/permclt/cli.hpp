#pragma once

#include <cstdint>
#include <iosfwd>

namespace permclt::cli {

/// Seed used when neither --seed nor PERMCLT_SEED is given.
inline constexpr std::uint64_t kDefaultSeed = 12345;

/// Runs the command line. Output goes to `out` (or the --out file), diagnostics
/// to `err`. Returns 0 on success, 2 on usage errors (unknown flags, invalid
/// permutations, sizes beyond a cap) and 1 on computation errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace permclt::cli
