#include "sweep.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <condition_variable>
#include <cstdio>
#include <map>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>

#include "floorset/classify.hpp"
#include "floorset/divisibility.hpp"
#include "floorset/floorset.hpp"
#include "floorset/psi_analysis.hpp"

namespace floorset::cli {

namespace {

// Fixed CSV column order (the header documents it).  Checks leave columns
// they do not produce empty.
enum Col : int {
    kColX = 0, kColD, kColCheck, kColPass,
    // thm1 / thm2
    kColBFloor, kColCardClosed, kColCardEnum, kColCardBrute, kColGapTwoSqrt,
    // decomp
    kColS1Max, kColS2Count, kColIntersection, kColReassembled, kColSetMatch,
    // bounds / lemma
    kColSdCard, kColLowerExact, kColUpperExact, kColRatioExpected,
    kColRMax, kColLeadingTerm, kColS1Sum, kColPsiSum, kColSdPlus, kColSdMinus,
    kColResidual, kColConjRatio,
    // divisor_sum
    kColExactSum, kColTauSum, kColAsymMain, kColAbsError,
    // classify
    kColUnits, kColPrimes, kColSemiprimes, kColOther, kColTotal,
    kNumCols
};

constexpr const char* kColNames[kNumCols] = {
    "x", "d", "check", "pass",
    "b_floor", "card_closed", "card_enum", "card_brute", "gap_two_sqrt",
    "s1_max", "s2_count", "intersection", "reassembled", "set_match",
    "sd_card", "lower_exact", "upper_exact", "ratio_expected",
    "r_max", "leading_term", "s1_sum", "psi_sum", "sd_plus", "sd_minus",
    "residual", "conj_ratio",
    "exact_sum", "tau_sum", "asym_main", "abs_error",
    "units", "primes", "semiprimes", "other", "total",
};

constexpr const char* check_name(Check c) {
    switch (c) {
        case Check::thm1: return "thm1";
        case Check::thm2: return "thm2";
        case Check::decomp: return "decomp";
        case Check::bounds: return "bounds";
        case Check::lemma: return "lemma";
        case Check::divisor_sum: return "divisor_sum";
        case Check::classify: return "classify";
    }
    return "?";
}

struct SweepRow {
    std::string vals[kNumCols];
    bool quoted[kNumCols] = {};

    void set_u64(Col c, std::uint64_t v) { vals[c] = std::to_string(v); }
    void set_u128(Col c, uint128 v) { vals[c] = to_decimal(v); }
    void set_real(Col c, double v) { vals[c] = format_real(v); }
    void set_str(Col c, const char* s) {
        vals[c] = s;
        quoted[c] = true;
    }

    void render(OutputFormat f, std::string& out) const {
        if (f == OutputFormat::csv) {
            for (int c = 0; c < kNumCols; ++c) {
                if (c) out += ',';
                out += vals[c];
            }
            out += '\n';
        } else {
            out += '{';
            bool first = true;
            for (int c = 0; c < kNumCols; ++c) {
                if (vals[c].empty()) continue;
                if (!first) out += ',';
                first = false;
                out += '"';
                out += kColNames[c];
                out += "\":";
                if (quoted[c]) {
                    out += '"';
                    out += vals[c];
                    out += '"';
                } else {
                    out += vals[c];
                }
            }
            out += "}\n";
        }
    }
};

std::string csv_header() {
    std::string out;
    for (int c = 0; c < kNumCols; ++c) {
        if (c) out += ',';
        out += kColNames[c];
    }
    out += '\n';
    return out;
}

// Naive trial-division classifier, independent of the library's
// Miller-Rabin path; oracle for the classify check.
ValueClass classify_naive(std::uint64_t n) {
    if (n == 1) return ValueClass::unit;
    int count = 0;
    for (std::uint64_t p = 2; p * p <= n && count <= 2; ++p) {
        while (n % p == 0) {
            n /= p;
            ++count;
        }
    }
    if (n > 1) ++count;
    if (count == 1) return ValueClass::prime;
    if (count == 2) return ValueClass::semiprime;
    return ValueClass::other;
}

// All rows for one X.  `brute` is filled lazily (at most one O(X) pass per
// X, shared by every oracle-backed check).  Returns the number of failed
// evaluations.
std::uint64_t emit_rows_for_x(std::uint64_t x, const SweepConfig& cfg,
                              const std::vector<std::uint64_t>& tau_prefix,
                              std::string& out) {
    std::uint64_t failures = 0;
    std::optional<std::vector<std::uint64_t>> brute;
    auto brute_set = [&]() -> const std::vector<std::uint64_t>& {
        if (!brute) brute = brute_force_set(x, cfg.oracle_cap);
        return *brute;
    };
    bool oracle_ok = x <= cfg.oracle_cap;

    for (Check check : cfg.checks) {
        switch (check) {
            case Check::thm1: {
                SweepRow row;
                row.set_u64(kColX, x);
                row.set_str(kColCheck, "thm1");
                std::uint64_t closed = cardinality_closed(x);
                std::uint64_t enumerated = block_count(x);
                bool pass = closed == enumerated;
                row.set_u64(kColBFloor, floor_b(x));
                row.set_u64(kColCardClosed, closed);
                row.set_u64(kColCardEnum, enumerated);
                if (oracle_ok) {
                    std::uint64_t b = brute_set().size();
                    row.set_u64(kColCardBrute, b);
                    pass = pass && closed == b;
                }
                row.set_u64(kColPass, pass);
                failures += !pass;
                row.render(cfg.format, out);
                break;
            }
            case Check::thm2: {
                SweepRow row;
                row.set_u64(kColX, x);
                row.set_str(kColCheck, "thm2");
                std::uint64_t closed = cardinality_closed(x);
                double gap = static_cast<double>(closed) -
                             2.0 * std::sqrt(static_cast<double>(x));
                bool pass = std::fabs(gap) < 2.0;
                row.set_u64(kColCardClosed, closed);
                row.set_real(kColGapTwoSqrt, gap);
                row.set_u64(kColPass, pass);
                failures += !pass;
                row.render(cfg.format, out);
                break;
            }
            case Check::decomp: {
                SweepRow row;
                row.set_u64(kColX, x);
                row.set_str(kColCheck, "decomp");
                auto rep = decompose(x);
                bool pass = rep.intersection_size == 0 || rep.intersection_size == 1;
                pass = pass && rep.reassembled_cardinality == cardinality_closed(x);
                row.set_u64(kColS1Max, rep.s1_max);
                row.set_u64(kColS2Count, rep.s2_values.size());
                row.set_u64(kColIntersection, rep.intersection_size);
                row.set_u64(kColReassembled, rep.reassembled_cardinality);
                if (oracle_ok) {
                    // {1..s1_max} ∪ s2 must equal the brute-force set exactly.
                    std::vector<std::uint64_t> merged;
                    for (std::uint64_t m = 1; m <= rep.s1_max; ++m) merged.push_back(m);
                    for (std::uint64_t v : rep.s2_values)
                        if (v > rep.s1_max) merged.push_back(v);
                    bool match = merged == brute_set();
                    row.set_u64(kColSetMatch, match);
                    pass = pass && match;
                }
                row.set_u64(kColPass, pass);
                failures += !pass;
                row.render(cfg.format, out);
                break;
            }
            case Check::bounds: {
                for (std::uint64_t d : cfg.d_list) {
                    if (d < 2) continue;  // the bounds theorem excludes d = 1
                    SweepRow row;
                    row.set_u64(kColX, x);
                    row.set_u64(kColD, d);
                    row.set_str(kColCheck, "bounds");
                    auto rep = trivial_bounds(x, d);
                    bool pass = rep.lower_bound_exact <= rep.cardinality &&
                                rep.cardinality <= rep.upper_bound_exact &&
                                rep.upper_bound_exact <= (x + 1) / 2 + 1;
                    row.set_u64(kColSdCard, rep.cardinality);
                    row.set_u64(kColLowerExact, rep.lower_bound_exact);
                    row.set_u64(kColUpperExact, rep.upper_bound_exact);
                    row.set_real(kColRatioExpected, rep.ratio_to_expected);
                    row.set_u64(kColPass, pass);
                    failures += !pass;
                    row.render(cfg.format, out);
                }
                break;
            }
            case Check::lemma: {
                for (std::uint64_t d : cfg.d_list) {
                    if (d > x) continue;
                    SweepRow row;
                    row.set_u64(kColX, x);
                    row.set_u64(kColD, d);
                    row.set_str(kColCheck, "lemma");
                    auto led = build_ledger(x, d);
                    bool pass = led.sd_plus_count + led.sd_minus_count >=
                                led.exact_cardinality;
                    pass = pass && std::isfinite(led.s1_term_sum) &&
                           std::isfinite(led.psi_double_sum) &&
                           std::isfinite(led.residual);
                    row.set_u64(kColSdCard, led.exact_cardinality);
                    row.set_u64(kColRMax, led.r_max);
                    row.set_real(kColLeadingTerm, led.leading_term);
                    row.set_real(kColS1Sum, led.s1_term_sum);
                    row.set_real(kColPsiSum, led.psi_double_sum);
                    row.set_u64(kColSdPlus, led.sd_plus_count);
                    row.set_u64(kColSdMinus, led.sd_minus_count);
                    row.set_real(kColResidual, led.residual);
                    row.set_real(kColConjRatio,
                                 led.psi_double_sum * 3.0 * static_cast<double>(d) /
                                     (2.0 * std::sqrt(static_cast<double>(x))));
                    row.set_u64(kColPass, pass);
                    failures += !pass;
                    row.render(cfg.format, out);
                }
                break;
            }
            case Check::divisor_sum: {
                SweepRow row;
                row.set_u64(kColX, x);
                row.set_str(kColCheck, "divisor_sum");
                auto rep = divisor_summatory(x);
                bool pass = true;
                row.set_u128(kColExactSum, rep.exact_sum);
                row.set_real(kColAsymMain, rep.asymptotic_main);
                row.set_real(kColAbsError, rep.abs_error);
                if (x < tau_prefix.size()) {
                    std::uint64_t expected = tau_prefix[x];
                    row.set_u64(kColTauSum, expected);
                    pass = rep.exact_sum == expected;
                }
                row.set_u64(kColPass, pass);
                failures += !pass;
                row.render(cfg.format, out);
                break;
            }
            case Check::classify: {
                SweepRow row;
                row.set_u64(kColX, x);
                row.set_str(kColCheck, "classify");
                auto rep = classify_set(x);
                bool pass = rep.units + rep.primes + rep.semiprimes + rep.other ==
                                rep.total &&
                            rep.total == cardinality_closed(x) && rep.units == 1;
                if (oracle_ok) {
                    std::uint64_t counts[4] = {0, 0, 0, 0};
                    for (std::uint64_t v : brute_set())
                        ++counts[static_cast<int>(classify_naive(v))];
                    pass = pass && counts[0] == rep.units && counts[1] == rep.primes &&
                           counts[2] == rep.semiprimes && counts[3] == rep.other;
                }
                row.set_u64(kColUnits, rep.units);
                row.set_u64(kColPrimes, rep.primes);
                row.set_u64(kColSemiprimes, rep.semiprimes);
                row.set_u64(kColOther, rep.other);
                row.set_u64(kColTotal, rep.total);
                row.set_u64(kColPass, pass);
                failures += !pass;
                row.render(cfg.format, out);
                break;
            }
        }
    }
    return failures;
}

}  // namespace

std::vector<Check> parse_checks(const std::string& list) {
    std::vector<Check> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        std::size_t comma = list.find(',', pos);
        std::string name = list.substr(pos, comma == std::string::npos ? std::string::npos
                                                                       : comma - pos);
        if (!name.empty()) {
            if (name == "thm1") out.push_back(Check::thm1);
            else if (name == "thm2") out.push_back(Check::thm2);
            else if (name == "decomp") out.push_back(Check::decomp);
            else if (name == "bounds") out.push_back(Check::bounds);
            else if (name == "lemma") out.push_back(Check::lemma);
            else if (name == "divisor_sum") out.push_back(Check::divisor_sum);
            else if (name == "classify") out.push_back(Check::classify);
            else
                throw std::invalid_argument(
                    "unknown check '" + name +
                    "' (expected thm1,thm2,decomp,bounds,lemma,divisor_sum,classify)");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument("--checks list is empty");
    return out;
}

std::vector<std::uint64_t> sweep_points(const SweepConfig& cfg) {
    if (cfg.x_from == 0) throw std::invalid_argument("--from must satisfy X >= 1");
    if (cfg.x_from > cfg.x_to)
        throw std::invalid_argument("--from must not exceed --to");
    validate_x(cfg.x_to);
    std::vector<std::uint64_t> xs;
    if (cfg.points > 0) {
        if (cfg.points == 1) {
            xs.push_back(cfg.x_from);
        } else if (cfg.log_spaced) {
            double lo = std::log(static_cast<double>(cfg.x_from));
            double hi = std::log(static_cast<double>(cfg.x_to));
            for (std::uint64_t i = 0; i < cfg.points; ++i) {
                double t = lo + (hi - lo) * static_cast<double>(i) /
                                    static_cast<double>(cfg.points - 1);
                auto x = static_cast<std::uint64_t>(std::llround(std::exp(t)));
                x = std::clamp(x, cfg.x_from, cfg.x_to);
                xs.push_back(x);
            }
        } else {
            for (std::uint64_t i = 0; i < cfg.points; ++i) {
                uint128 span = uint128{cfg.x_to - cfg.x_from} * i / (cfg.points - 1);
                xs.push_back(cfg.x_from + static_cast<std::uint64_t>(span));
            }
        }
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    } else {
        if (cfg.x_step == 0) throw std::invalid_argument("--step must be >= 1");
        for (std::uint64_t x = cfg.x_from;; x += cfg.x_step) {
            xs.push_back(x);
            if (x > cfg.x_to - std::min(cfg.x_to, cfg.x_step)) break;
        }
        while (!xs.empty() && xs.back() > cfg.x_to) xs.pop_back();
    }
    return xs;
}

std::uint64_t run_sweep(const SweepConfig& cfg) {
    std::vector<std::uint64_t> xs = sweep_points(cfg);

    bool wants_lemma_or_bounds =
        std::any_of(cfg.checks.begin(), cfg.checks.end(), [](Check c) {
            return c == Check::bounds || c == Check::lemma;
        });
    if (wants_lemma_or_bounds && cfg.d_list.empty())
        throw std::invalid_argument("--d must be nonempty for bounds/lemma checks");

    // Shared tau prefix for the divisor_sum oracle: one sieve instead of one
    // per X.  Covers X up to min(x_to, oracle_cap).
    std::vector<std::uint64_t> tau_prefix;
    if (std::count(cfg.checks.begin(), cfg.checks.end(), Check::divisor_sum) > 0 &&
        !xs.empty()) {
        std::uint64_t limit = std::min(xs.back(), cfg.oracle_cap);
        tau_prefix.assign(limit + 1, 0);
        for (std::uint64_t d = 1; d <= limit; ++d)
            for (std::uint64_t m = d; m <= limit; m += d) ++tau_prefix[m];
        for (std::uint64_t k = 1; k <= limit; ++k) tau_prefix[k] += tau_prefix[k - 1];
    }

    if (cfg.format == OutputFormat::csv) {
        std::string header = csv_header();
        std::fwrite(header.data(), 1, header.size(), stdout);
    }

    // Batched ordered emit: workers claim contiguous batches, the main thread
    // writes them in sequence.  Output bytes are independent of worker count.
    constexpr std::size_t kBatchSize = 64;
    const std::size_t batch_count = (xs.size() + kBatchSize - 1) / kBatchSize;
    unsigned workers = std::max(1u, cfg.workers);
    const std::size_t max_lead = 8 * workers;

    std::atomic<std::size_t> next_batch{0};
    std::atomic<std::uint64_t> failures{0};
    std::mutex mu;
    std::condition_variable cv_done, cv_space;
    std::map<std::size_t, std::string> finished;
    std::size_t emit_next = 0;

    auto worker_fn = [&]() {
        while (true) {
            std::size_t b = next_batch.fetch_add(1);
            if (b >= batch_count) return;
            std::string text;
            std::uint64_t local_failures = 0;
            std::size_t first = b * kBatchSize;
            std::size_t last = std::min(first + kBatchSize, xs.size());
            for (std::size_t i = first; i < last; ++i)
                local_failures += emit_rows_for_x(xs[i], cfg, tau_prefix, text);
            failures.fetch_add(local_failures);
            std::unique_lock lock(mu);
            cv_space.wait(lock, [&] { return b < emit_next + max_lead; });
            finished.emplace(b, std::move(text));
            cv_done.notify_all();
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker_fn);

    for (std::size_t b = 0; b < batch_count; ++b) {
        std::string text;
        {
            std::unique_lock lock(mu);
            cv_done.wait(lock, [&] { return finished.count(b) > 0; });
            text = std::move(finished[b]);
            finished.erase(b);
            ++emit_next;
            cv_space.notify_all();
        }
        std::fwrite(text.data(), 1, text.size(), stdout);
    }
    for (auto& t : pool) t.join();
    std::fflush(stdout);
    return failures.load();
}

}  // namespace floorset::cli
