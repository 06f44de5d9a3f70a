#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <numeric>
#include <vector>

#include "floorset/floorset.hpp"

using namespace floorset;

TEST_CASE("floor_b: largest m with m(m+1) <= X") {
    CHECK(floor_b(1) == 0);
    CHECK(floor_b(10) == 2);   // 2*3 <= 10 < 3*4
    CHECK(floor_b(12) == 3);   // 3*4 = 12 exactly
    CHECK(floor_b(2) == 1);
    CHECK_THROWS_AS(floor_b(0), std::invalid_argument);
    for (std::uint64_t x = 1; x <= 50'000; ++x) {
        std::uint64_t m = floor_b(x);
        REQUIRE(m * (m + 1) <= x);
        REQUIRE((m + 1) * (m + 2) > x);
    }
    // Near-square stress: floating-point sqrt would misstep here.
    for (std::uint64_t k = (1ULL << 31) - 5; k <= (1ULL << 31) - 3; ++k) {
        std::uint64_t x = k * (k + 1);
        CHECK(floor_b(x) == k);
        CHECK(floor_b(x - 1) == k - 1);
        CHECK(floor_b(x + 1) == k);
    }
}

TEST_CASE("cardinality_closed matches the brute-force oracle on known values") {
    CHECK(cardinality_closed(1) == 1);
    CHECK(cardinality_closed(10) == 5);    // S(10) = {1,2,3,5,10}
    CHECK(cardinality_closed(12) == 6);    // S(12) = {1,2,3,4,6,12}
    CHECK(cardinality_closed(100) == 19);
    CHECK(brute_force_set(10) == std::vector<std::uint64_t>{1, 2, 3, 5, 10});
    CHECK(brute_force_set(2) == std::vector<std::uint64_t>{1, 2});
    CHECK(brute_force_set(16) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 8, 16});
    CHECK(brute_force_set(100).size() == 19);
}

TEST_CASE("closed form == oracle == block count on a desk-scale sweep") {
    for (std::uint64_t x = 1; x <= 5000; ++x) {
        std::uint64_t closed = cardinality_closed(x);
        REQUIRE(closed == brute_force_set(x).size());
        REQUIRE(closed == block_count(x));
    }
}

TEST_CASE("enumerate_blocks: hand-checked block lists") {
    auto blocks10 = collect_blocks(10);
    std::vector<QuotientBlock> expected10 = {
        {10, 1, 1}, {5, 2, 2}, {3, 3, 3}, {2, 4, 5}, {1, 6, 10}};
    CHECK(blocks10 == expected10);

    CHECK(collect_blocks(1) == std::vector<QuotientBlock>{{1, 1, 1}});

    auto blocks12 = collect_blocks(12);
    REQUIRE(blocks12.size() == 6);
    std::vector<std::uint64_t> vals;
    for (const auto& b : blocks12) vals.push_back(b.v);
    CHECK(vals == std::vector<std::uint64_t>{12, 6, 4, 3, 2, 1});
}

TEST_CASE("blocks partition [1, X] with strictly decreasing v") {
    auto check_partition = [](std::uint64_t x) {
        std::uint64_t expect_n = 1;
        std::uint64_t prev_v = 0;
        for (const QuotientBlock& b : BlockRange(x)) {
            REQUIRE(b.n_lo == expect_n);
            REQUIRE(b.n_lo <= b.n_hi);
            REQUIRE(b.n_hi <= x);
            REQUIRE(b.v == x / b.n_lo);
            REQUIRE(b.n_hi == x / b.v);
            if (prev_v != 0) REQUIRE(b.v < prev_v);
            // Maximality at both edges.
            if (b.n_lo > 1) REQUIRE(x / (b.n_lo - 1) > b.v);
            if (b.n_hi < x) REQUIRE(x / (b.n_hi + 1) < b.v);
            prev_v = b.v;
            expect_n = b.n_hi + 1;
        }
        REQUIRE(expect_n == x + 1);
        if (x >= 2) {
            auto blocks = collect_blocks(x);
            CHECK(blocks.back().v == 1);
            CHECK(blocks.back().n_lo == x / 2 + 1);
            CHECK(blocks.back().n_hi == x);
        }
    };
    for (std::uint64_t x = 1; x <= 3000; ++x) check_partition(x);
    check_partition(999'983);       // prime
    check_partition(1'000'000);     // square
    check_partition(1'000'000'000'000ULL);  // large: O(sqrt X) still fine
}

TEST_CASE("block count equals closed form at scale, streaming stays lazy") {
    // Spot checks across magnitudes (oracle-free consistency).
    for (std::uint64_t x : {100'000ULL, 1'000'000ULL, 123'456'789ULL, 10'000'000'000ULL}) {
        CHECK(block_count(x) == cardinality_closed(x));
    }
    // The stream yields the first blocks of a huge X without walking it all.
    BlockRange big(kMaxX);
    auto it = big.begin();
    CHECK((*it).v == kMaxX);
    ++it;
    CHECK((*it).v == kMaxX / 2);
}

TEST_CASE("brute_force_set respects the oracle cap") {
    CHECK_THROWS_WITH_AS(brute_force_set(101, 100),
                         "brute_force_set: X = 101 exceeds the oracle cap 100",
                         std::invalid_argument);
    CHECK_NOTHROW(brute_force_set(100, 100));
}

TEST_CASE("decompose: hand-evaluated cases") {
    auto r12 = decompose(12);
    CHECK(r12.s1_max == 3);
    CHECK(r12.s2_values == std::vector<std::uint64_t>{3, 4, 6, 12});
    CHECK(r12.intersection_size == 1);
    CHECK(r12.reassembled_cardinality == 6);

    auto r10 = decompose(10);
    CHECK(r10.s1_max == 2);
    CHECK(r10.s2_values == std::vector<std::uint64_t>{3, 5, 10});
    CHECK(r10.intersection_size == 0);
    CHECK(r10.reassembled_cardinality == 5);

    auto r1 = decompose(1);
    CHECK(r1.s1_max == 0);
    CHECK(r1.s2_values == std::vector<std::uint64_t>{1});
    CHECK(r1.intersection_size == 0);
    CHECK(r1.reassembled_cardinality == 1);
}

TEST_CASE("decomposition reassembles the set itself, not just the count") {
    for (std::uint64_t x = 1; x <= 5000; ++x) {
        auto rep = decompose(x);
        REQUIRE(rep.intersection_size == (x / (rep.s1_max + 1) == rep.s1_max ? 1 : 0));
        REQUIRE(rep.reassembled_cardinality == cardinality_closed(x));
        // s2 strictly increasing
        for (std::size_t i = 1; i < rep.s2_values.size(); ++i)
            REQUIRE(rep.s2_values[i - 1] < rep.s2_values[i]);
        // {1..s1_max} ∪ s2 must equal the brute-force set exactly.
        std::vector<std::uint64_t> unioned;
        for (std::uint64_t m = 1; m <= rep.s1_max; ++m) unioned.push_back(m);
        for (std::uint64_t v : rep.s2_values)
            if (v > rep.s1_max) unioned.push_back(v);
        REQUIRE(unioned == brute_force_set(x));
    }
}

TEST_CASE("consecutive quotients are distinct while n(n-1) <= X") {
    for (std::uint64_t x = 1; x <= 10'000; ++x) {
        for (std::uint64_t n = 2; n * (n - 1) <= x; ++n) {
            REQUIRE(x / (n - 1) > x / n);
        }
    }
}

TEST_CASE("summary ties the closed form to the enumeration") {
    auto s = summarize(100);
    CHECK(s.b_floor == 9);
    CHECK(s.card_closed == 19);
    CHECK(s.card_enumerated == 19);
    CHECK(s.gap_two_sqrt == doctest::Approx(-1.0).epsilon(1e-12));  // 19 - 2*10
}

TEST_CASE("divisor summatory: oracle agreement and known values") {
    CHECK(static_cast<std::uint64_t>(divisor_summatory(1).exact_sum) == 1);
    CHECK(static_cast<std::uint64_t>(divisor_summatory(5).exact_sum) == 10);
    CHECK(static_cast<std::uint64_t>(divisor_summatory(100).exact_sum) == 482);

    auto tau = tau_oracle(2000);
    CHECK(tau[1] == 1);
    CHECK(tau[6] == 4);
    CHECK(tau[64] == 7);
    std::uint64_t prefix = 0;
    for (std::uint64_t x = 1; x <= 2000; ++x) {
        prefix += tau[x];
        REQUIRE(static_cast<std::uint64_t>(divisor_summatory(x).exact_sum) == prefix);
    }
}

TEST_CASE("divisor summatory asymptotic error is small at scale") {
    auto rep = divisor_summatory(1'000'000);
    double rel = rep.abs_error / static_cast<double>(rep.exact_sum);
    CHECK(rel < 1e-2);
}

TEST_CASE("tau_oracle respects the cap") {
    CHECK_THROWS_AS(tau_oracle(1001, 1000), std::invalid_argument);
}
