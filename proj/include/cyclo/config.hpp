#pragma once

#include <cstdint>

namespace cyclo {

// Degree caps keep dense coefficient vectors within sane memory bounds.
// Both defaults can be overridden with the CYCLO_MAX_DEGREE environment
// variable (an integer number of coefficients).

// Cap for the brute-force polynomial route (64-bit coefficients).
std::int64_t oracle_degree_cap();

// Cap for the windowed ternary engine (32-bit coefficients).
std::int64_t engine_degree_cap();

inline constexpr std::int64_t kDefaultOracleDegreeCap = 2'000'000;
inline constexpr std::int64_t kDefaultEngineDegreeCap = 10'000'000;

} // namespace cyclo
