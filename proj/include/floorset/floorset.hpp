// Floor-quotient set engine.
//
// S(X) = { floor(X/n) : 1 <= n <= X } is computed three independent ways:
//   * closed form |S(X)| = floor(b) + floor(X / (floor(b)+1)),
//     where b = (-1 + sqrt(4X+1)) / 2 is the positive root of m(m+1) = X;
//   * O(sqrt X) enumeration of the maximal constant-quotient blocks;
//   * an O(X) brute-force oracle for desk-scale cross-checks.
//
// The decomposition S1 = {1..floor(b)} and S2 = { floor(X/n) : n <= floor(b)+1 }
// with |S1 ∩ S2| in {0,1} reassembles the closed form by inclusion-exclusion,
// and sum(floor(X/n)) = sum(tau(n)) ties the block walk to the divisor
// summatory function.
#pragma once

#include <cstdint>
#include <iterator>
#include <vector>

#include "floorset/exactint.hpp"

namespace floorset {

// Maximal run [n_lo, n_hi] on which floor(X/n) equals v.  Blocks partition
// [1, X]; there are |S(X)| of them and v is strictly decreasing.
struct QuotientBlock {
    std::uint64_t v;
    std::uint64_t n_lo;
    std::uint64_t n_hi;

    bool operator==(const QuotientBlock&) const = default;
};

// Lazy walk over the quotient blocks of X in ascending n.  O(1) state, so
// huge X can be streamed without materialising O(sqrt X) memory.
class BlockRange {
public:
    explicit BlockRange(std::uint64_t x);  // validates 1 <= x <= kMaxX

    class iterator {
    public:
        using value_type = QuotientBlock;
        using difference_type = std::ptrdiff_t;

        iterator() = default;
        explicit iterator(std::uint64_t x) : x_(x), done_(false) { advance_from(1); }

        const QuotientBlock& operator*() const noexcept { return cur_; }
        const QuotientBlock* operator->() const noexcept { return &cur_; }

        iterator& operator++() {
            advance_from(cur_.n_hi + 1);
            return *this;
        }
        void operator++(int) { ++*this; }

        bool operator==(std::default_sentinel_t) const noexcept { return done_; }

    private:
        void advance_from(std::uint64_t n) {
            if (n > x_ || n == 0) {  // n == 0 guards n_hi + 1 wrap at x_ = 2^64-1 (never reached: x_ <= kMaxX)
                done_ = true;
                return;
            }
            cur_.v = x_ / n;
            cur_.n_lo = n;
            cur_.n_hi = x_ / cur_.v;
        }

        std::uint64_t x_ = 0;
        QuotientBlock cur_{};
        bool done_ = true;
    };

    iterator begin() const { return iterator(x_); }
    std::default_sentinel_t end() const noexcept { return {}; }

    std::uint64_t x() const noexcept { return x_; }

private:
    std::uint64_t x_;
};

// Explicit collection of the block stream (O(sqrt X) memory).
std::vector<QuotientBlock> collect_blocks(std::uint64_t x);

// Number of blocks, i.e. |S(X)| by enumeration.
std::uint64_t block_count(std::uint64_t x);

// Largest m >= 0 with m(m+1) <= X; equals floor(b).  Integer-only: the
// irrational b is never materialised.
std::uint64_t floor_b(std::uint64_t x);

// Closed-form |S(X)| = floor_b(X) + floor(X / (floor_b(X)+1)).
// floor(b+1) = floor(b) + 1 holds unconditionally: b is either an exact
// integer (4X+1 a perfect odd square) or irrational.
std::uint64_t cardinality_closed(std::uint64_t x);

// O(X) oracle: the set {floor(X/n)} collected by direct loop, ascending.
// Rejects x above oracle_cap.
std::vector<std::uint64_t> brute_force_set(std::uint64_t x,
                                           std::uint64_t oracle_cap = kDefaultOracleCap);

struct FloorSetSummary {
    std::uint64_t x;
    std::uint64_t b_floor;
    std::uint64_t card_closed;
    std::uint64_t card_enumerated;
    double gap_two_sqrt;  // card_closed - 2*sqrt(X); reporting only
};

// Closed form and block enumeration side by side.
FloorSetSummary summarize(std::uint64_t x);

struct DecompositionReport {
    std::uint64_t s1_max;                   // S1 = {1 .. s1_max}
    std::vector<std::uint64_t> s2_values;   // distinct floor(X/n), n <= floor_b+1, ascending
    int intersection_size;                  // |S1 ∩ S2|, provably 0 or 1
    std::uint64_t reassembled_cardinality;  // s1_max + |s2_values| - intersection_size
};

DecompositionReport decompose(std::uint64_t x);

struct DivisorSumReport {
    std::uint64_t x;
    uint128 exact_sum;       // sum over blocks of v * (n_hi - n_lo + 1)
    double asymptotic_main;  // X ln X + (2*gamma - 1) X
    double abs_error;        // |exact_sum - asymptotic_main|
};

DivisorSumReport divisor_summatory(std::uint64_t x);

// Divisor-counting sieve; result[n] = tau(n) for 1 <= n <= x, result[0] = 0.
// Rejects x above oracle_cap.
std::vector<std::uint32_t> tau_oracle(std::uint64_t x,
                                      std::uint64_t oracle_cap = kDefaultOracleCap);

inline constexpr double kEulerGamma = 0.5772156649015328606065120900824024;

}  // namespace floorset
