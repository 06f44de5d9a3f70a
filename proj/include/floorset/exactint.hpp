// Exact integer primitives used throughout: integer square/cube roots,
// overflow-checked multiplication and floor/ceiling division helpers.
// Everything here is pure integer arithmetic; 128-bit intermediates keep
// the full 64-bit word range usable.
#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace floorset {

using uint128 = unsigned __int128;

// Largest X the library accepts.  With X <= 2^62, 4X+1 and all block
// arithmetic stay exact after widening to 128-bit intermediates.
inline constexpr std::uint64_t kMaxX = std::uint64_t{1} << 62;

// Default cap for the O(X) brute-force oracles.
inline constexpr std::uint64_t kDefaultOracleCap = 10'000'000;

// Floor square root: the unique s with s^2 <= y < (s+1)^2.
// Newton iteration seeded from the leading-zero count, then a short exact
// correction; valid over the full uint64_t range.
std::uint64_t isqrt(std::uint64_t y) noexcept;

// Floor cube root: the unique s with s^3 <= y < (s+1)^3.
std::uint64_t icbrt(std::uint64_t y) noexcept;

// Exact product, or nullopt if a*b does not fit a 64-bit word.
std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept;

// ceil(num/den); den must be nonzero.
std::uint64_t ceil_div(std::uint64_t num, std::uint64_t den) noexcept;

// Rejects X outside [1, kMaxX] with std::invalid_argument.
void validate_x(std::uint64_t x);

// Decimal rendering of a 128-bit value (for reports and output streams).
std::string to_decimal(uint128 v);

}  // namespace floorset
