// Numeric evaluation of the sawtooth-sum decomposition of |S_d(X)|:
//
//   |S_d(X)| ~ 4*sqrt(X)/(3d)
//              + sum_{r=1}^{R} sum_{j=J_lo(r)}^{J_hi(r)}
//                    [ psi(X/(d*j+1)) - psi(X/(d*j)) ]
//              + O(1),
//
// with psi(t) = t - floor(t) - 1/2 and R = floor_b(X) + 1 (the integer value
// of X/b).  The companion telescoping sum S1 over the same (r, j) lattice has
// terms X/(d*j) - X/(d*j+1) = X/(d*j*(d*j+1)) and main term sqrt(X)/(3d).
//
// Every psi argument is an exact integer pair (X, d*j); the fractional part
// is taken in integer arithmetic before the single division.  Both sums are
// accumulated in a fixed ascending (r, j) order with compensated summation,
// so results are bit-reproducible.
#pragma once

#include <cstdint>

#include "floorset/exactint.hpp"

namespace floorset {

// psi(num/den) = (num mod den)/den - 1/2; always in [-1/2, 1/2).
double psi(std::uint64_t num, std::uint64_t den);

struct PsiLedger {
    std::uint64_t x;
    std::uint64_t d;
    std::uint64_t r_max;          // floor_b(X) + 1
    double leading_term;          // 4*sqrt(X) / (3d)
    double s1_term_sum;           // sum of X/(d*j) - X/(d*j+1) over the lattice
    double psi_double_sum;        // sum of psi(X/(d*j+1)) - psi(X/(d*j))
    std::uint64_t sd_plus_count;  // multiples of d among {1..floor_b(X)}
    std::uint64_t sd_minus_count; // blocks with n_lo <= floor_b(X)+1 and d | v
    std::uint64_t exact_cardinality;  // |S_d(X)|
    double residual;              // exact_cardinality - leading_term - psi_double_sum
};

// The double psi-sum over rows r = 1..floor_b(X)+1 with integer j in
// [max(1, ceil((X-r)/(r*d))), floor(X/(r*d))]; empty rows are skipped.
double lemma_double_sum(std::uint64_t x, std::uint64_t d);

// The telescoping companion sum on the same lattice.
double s1_term_sum(std::uint64_t x, std::uint64_t d);

// Every intermediate quantity in one pass; requires 1 <= d <= X.
PsiLedger build_ledger(std::uint64_t x, std::uint64_t d);

// The integer reading of the lattice endpoints, recorded in CLI output.
inline constexpr const char* kJRangeConvention =
    "r=1..floor_b(X)+1; j=max(1,ceil((X-r)/(r*d)))..floor(X/(r*d))";

}  // namespace floorset
