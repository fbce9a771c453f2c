#pragma once

#include <cstdint>
#include <ostream>

namespace calex {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed2024;

// Runs the full verification table (paper-value reproductions plus the
// randomized property suites) and prints one PASS/FAIL line per
// criterion. Returns true when everything passed.
bool run_acceptance(std::ostream& os, std::uint64_t seed = kDefaultSeed,
                    int threads = 1);

}  // namespace calex
