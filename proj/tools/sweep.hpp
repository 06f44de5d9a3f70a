// Sweep harness: runs the enabled checks over a range of X (one row per X,
// and per d where a check is d-indexed), streaming CSV or JSON rows in
// ascending X order.  X values may be sharded across worker threads; rows
// are buffered per batch and emitted in order, so output is byte-identical
// for any worker count.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "emit.hpp"

namespace floorset::cli {

enum class Check { thm1, thm2, decomp, bounds, lemma, divisor_sum, classify };

struct SweepConfig {
    std::uint64_t x_from = 1;
    std::uint64_t x_to = 1;
    std::uint64_t x_step = 1;
    std::uint64_t points = 0;   // 0: arithmetic stepping; >0: point count
    bool log_spaced = false;    // with points: geometric spacing
    std::vector<std::uint64_t> d_list = {2, 3, 5, 10};
    std::vector<Check> checks = {Check::thm1, Check::thm2};
    OutputFormat format = OutputFormat::csv;
    std::uint64_t oracle_cap = kDefaultOracleCap;
    unsigned workers = 1;
};

// Parses "thm1,decomp,..." (throws std::invalid_argument on unknown names).
std::vector<Check> parse_checks(const std::string& list);

// The X values a config visits, ascending and deduplicated.
std::vector<std::uint64_t> sweep_points(const SweepConfig& cfg);

// Runs the sweep, writing rows to stdout.  Returns the number of failed
// check evaluations (0 means every enabled check passed everywhere).
std::uint64_t run_sweep(const SweepConfig& cfg);

}  // namespace floorset::cli
