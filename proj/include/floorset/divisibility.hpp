// S_d(X) = { m in S(X) : d | m }, counted exactly by filtering the quotient
// blocks, with the trivial-bounds chain in its slack-free form:
//   floor(floor_b(X)/d)  <=  |S_d(X)|  <=  |S(X)|.
#pragma once

#include <cstdint>

#include "floorset/exactint.hpp"

namespace floorset {

struct DivisibilityReport {
    std::uint64_t x;
    std::uint64_t d;
    std::uint64_t cardinality;        // |S_d(X)|
    std::uint64_t lower_bound_exact;  // floor(floor_b(X) / d)
    std::uint64_t upper_bound_exact;  // |S(X)| by the closed form
    double ratio_to_expected;         // cardinality * d / sqrt(X)
    double loose_lower;               // sqrt(X)/d, reporting only
    double loose_upper;               // X/2, reporting only
};

// |S_d(X)| in O(sqrt X): counts blocks whose value is divisible by d.
// d = 0 is rejected; d > X yields 0 (no element of S(X) exceeds X).
std::uint64_t sd_cardinality(std::uint64_t x, std::uint64_t d);

// O(X) oracle: filters brute_force_set(x) by divisibility.
std::uint64_t sd_brute(std::uint64_t x, std::uint64_t d,
                       std::uint64_t oracle_cap = kDefaultOracleCap);

// Full report for any d >= 1 (d = 1 degenerates to |S(X)| itself).
DivisibilityReport divisibility_report(std::uint64_t x, std::uint64_t d);

// The bounds theorem excludes d = 1; this entry point enforces d >= 2.
DivisibilityReport trivial_bounds(std::uint64_t x, std::uint64_t d);

}  // namespace floorset
