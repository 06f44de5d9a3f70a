#include "floorset/floorset.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace floorset {

BlockRange::BlockRange(std::uint64_t x) : x_(x) { validate_x(x); }

std::vector<QuotientBlock> collect_blocks(std::uint64_t x) {
    std::vector<QuotientBlock> out;
    for (const QuotientBlock& blk : BlockRange(x)) out.push_back(blk);
    return out;
}

std::uint64_t block_count(std::uint64_t x) {
    validate_x(x);
    std::uint64_t count = 0;
    std::uint64_t n = 1;
    while (n <= x) {
        std::uint64_t v = x / n;
        n = x / v + 1;
        ++count;
    }
    return count;
}

std::uint64_t floor_b(std::uint64_t x) {
    validate_x(x);
    std::uint64_t s = isqrt(x);
    // s^2 <= x, so s(s+1) overshoots by at most one decrement.
    while (s > 0 && uint128{s} * (s + 1) > x) --s;
    return s;
}

std::uint64_t cardinality_closed(std::uint64_t x) {
    std::uint64_t bf = floor_b(x);
    return bf + x / (bf + 1);
}

std::vector<std::uint64_t> brute_force_set(std::uint64_t x, std::uint64_t oracle_cap) {
    validate_x(x);
    if (x > oracle_cap)
        throw std::invalid_argument("brute_force_set: X = " + std::to_string(x) +
                                    " exceeds the oracle cap " + std::to_string(oracle_cap));
    // floor(X/n) is non-increasing in n, so recording value changes yields
    // the distinct set in descending order.
    std::vector<std::uint64_t> vals;
    std::uint64_t prev = 0;
    for (std::uint64_t n = 1; n <= x; ++n) {
        std::uint64_t v = x / n;
        if (v != prev) {
            vals.push_back(v);
            prev = v;
        }
    }
    std::reverse(vals.begin(), vals.end());
    return vals;
}

FloorSetSummary summarize(std::uint64_t x) {
    FloorSetSummary s{};
    s.x = x;
    s.b_floor = floor_b(x);
    s.card_closed = s.b_floor + x / (s.b_floor + 1);
    s.card_enumerated = block_count(x);
    s.gap_two_sqrt =
        static_cast<double>(s.card_closed) - 2.0 * std::sqrt(static_cast<double>(x));
    return s;
}

DecompositionReport decompose(std::uint64_t x) {
    DecompositionReport rep{};
    rep.s1_max = floor_b(x);
    // The values of n in S2 are 1, 2, ..., floor(b)+1, and on that range the
    // quotients are strictly decreasing, so collecting in reverse n-order
    // already gives them ascending and distinct.
    std::uint64_t n_max = rep.s1_max + 1;
    rep.s2_values.reserve(n_max);
    for (std::uint64_t n = n_max; n >= 1; --n) rep.s2_values.push_back(x / n);
    rep.s2_values.erase(std::unique(rep.s2_values.begin(), rep.s2_values.end()),
                        rep.s2_values.end());
    rep.intersection_size = (x / n_max == rep.s1_max) ? 1 : 0;
    rep.reassembled_cardinality =
        rep.s1_max + rep.s2_values.size() - static_cast<std::uint64_t>(rep.intersection_size);
    return rep;
}

DivisorSumReport divisor_summatory(std::uint64_t x) {
    DivisorSumReport rep{};
    rep.x = x;
    uint128 sum = 0;
    for (const QuotientBlock& blk : BlockRange(x))
        sum += uint128{blk.v} * (blk.n_hi - blk.n_lo + 1);
    rep.exact_sum = sum;
    double xd = static_cast<double>(x);
    rep.asymptotic_main = xd * std::log(xd) + (2.0 * kEulerGamma - 1.0) * xd;
    rep.abs_error = std::fabs(static_cast<double>(sum) - rep.asymptotic_main);
    return rep;
}

std::vector<std::uint32_t> tau_oracle(std::uint64_t x, std::uint64_t oracle_cap) {
    validate_x(x);
    if (x > oracle_cap)
        throw std::invalid_argument("tau_oracle: X = " + std::to_string(x) +
                                    " exceeds the oracle cap " + std::to_string(oracle_cap));
    std::vector<std::uint32_t> tau(x + 1, 0);
    for (std::uint64_t d = 1; d <= x; ++d)
        for (std::uint64_t m = d; m <= x; m += d) ++tau[m];
    return tau;
}

}  // namespace floorset
