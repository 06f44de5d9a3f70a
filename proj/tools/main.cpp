// floorset: query and verification tool for the floor-quotient set
// S(X) = { floor(X/n) : 1 <= n <= X }.
//
// Subcommands
//   card X         closed-form vs enumerated |S(X)|
//   blocks X       stream the constant-quotient blocks of X
//   decompose X    the S1/S2 split and its inclusion-exclusion reassembly
//   divisible X d  |S_d(X)| with the exact bound chain
//   psi X d        the sawtooth-sum ledger for (X, d)
//   classify X     prime/semiprime classification of S(X)
//   divsum X       sum of floor(X/n) with its asymptotic comparison
//   sweep          run checks over a range of X (CSV/JSON rows)
//
// Exit codes: 0 success, 1 sweep check failure, 2 argument/domain error.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "emit.hpp"
#include "sweep.hpp"

#include "floorset/classify.hpp"
#include "floorset/divisibility.hpp"
#include "floorset/floorset.hpp"
#include "floorset/psi_analysis.hpp"

namespace cli = floorset::cli;

namespace {

void print_record(const cli::Fields& fields, cli::OutputFormat fmt) {
    std::string out;
    if (fmt == cli::OutputFormat::csv) out = fields.csv_header() + fields.csv_row();
    else out = fields.json_line();
    std::fwrite(out.data(), 1, out.size(), stdout);
}

int run(int argc, char** argv) {
    CLI::App app{"floor-quotient set toolkit"};
    app.require_subcommand(1);

    std::string format = "csv";
    app.add_option("--format", format, "Output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();

    std::uint64_t x = 0;
    std::uint64_t d = 1;
    std::uint64_t oracle_cap = floorset::kDefaultOracleCap;

    auto* card = app.add_subcommand("card", "Cardinality of S(X), closed form and enumerated");
    card->add_option("X", x, "Set parameter, 1 <= X <= 2^62")->required();

    auto* blocks = app.add_subcommand("blocks", "Stream the quotient blocks of X");
    blocks->add_option("X", x)->required();

    auto* decomp = app.add_subcommand("decompose", "S1/S2 decomposition report");
    decomp->add_option("X", x)->required();

    auto* divisible = app.add_subcommand("divisible", "Cardinality of S_d(X) with bounds");
    divisible->add_option("X", x)->required();
    divisible->add_option("d", d, "Divisor, d >= 1")->required();

    auto* psi_cmd = app.add_subcommand("psi", "Sawtooth-sum ledger for (X, d)");
    psi_cmd->add_option("X", x)->required();
    psi_cmd->add_option("d", d, "Divisor, 1 <= d <= X")->required();

    auto* classify_cmd = app.add_subcommand("classify", "Classify the elements of S(X)");
    classify_cmd->add_option("X", x)->required();

    auto* divsum = app.add_subcommand("divsum", "Divisor summatory sum over blocks");
    divsum->add_option("X", x)->required();

    cli::SweepConfig cfg;
    std::string checks_arg = "thm1,thm2";
    std::string d_arg = "2,3,5,10";
    std::uint64_t points = 0;
    auto* sweep = app.add_subcommand("sweep", "Run checks over a range of X");
    sweep->add_option("--from", cfg.x_from, "First X")->required();
    sweep->add_option("--to", cfg.x_to, "Last X")->required();
    sweep->add_option("--step", cfg.x_step, "Arithmetic step (default 1)");
    sweep->add_option("--points", points, "Number of sample points instead of stepping");
    sweep->add_flag("--log", cfg.log_spaced, "Log-space the sample points (needs --points)");
    sweep->add_option("--checks", checks_arg,
                      "Comma list: thm1,thm2,decomp,bounds,lemma,divisor_sum,classify")
        ->capture_default_str();
    sweep->add_option("--d", d_arg, "Comma list of divisors for bounds/lemma")
        ->capture_default_str();
    sweep->add_option("--oracle-cap", oracle_cap,
                      "Largest X the O(X) oracles run at")
        ->capture_default_str();
    sweep->add_option("--workers", cfg.workers, "Worker threads (output is order-stable)")
        ->capture_default_str();

    // Global flags (--format) may appear before or after the subcommand name.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    cli::OutputFormat fmt =
        format == "json" ? cli::OutputFormat::json : cli::OutputFormat::csv;

    try {
        if (card->parsed()) {
            auto s = floorset::summarize(x);
            cli::Fields f;
            f.u64("x", s.x);
            f.u64("b_floor", s.b_floor);
            f.u64("card_closed", s.card_closed);
            f.u64("card_enumerated", s.card_enumerated);
            f.real("gap_two_sqrt", s.gap_two_sqrt);
            print_record(f, fmt);
            return 0;
        }
        if (blocks->parsed()) {
            bool first = true;
            std::string out;
            for (const floorset::QuotientBlock& blk : floorset::BlockRange(x)) {
                cli::Fields f;
                f.u64("v", blk.v);
                f.u64("n_lo", blk.n_lo);
                f.u64("n_hi", blk.n_hi);
                if (first && fmt == cli::OutputFormat::csv) {
                    out = f.csv_header();
                    std::fwrite(out.data(), 1, out.size(), stdout);
                }
                first = false;
                out = f.row(fmt);
                std::fwrite(out.data(), 1, out.size(), stdout);
            }
            return 0;
        }
        if (decomp->parsed()) {
            auto rep = floorset::decompose(x);
            cli::Fields f;
            f.u64("x", x);
            f.u64("s1_max", rep.s1_max);
            f.u64("s2_count", rep.s2_values.size());
            f.i("intersection", rep.intersection_size);
            f.u64("reassembled", rep.reassembled_cardinality);
            std::string joined;
            for (std::uint64_t v : rep.s2_values) {
                if (!joined.empty()) joined += ' ';
                joined += std::to_string(v);
            }
            f.str("s2_values", joined);
            print_record(f, fmt);
            return 0;
        }
        if (divisible->parsed()) {
            if (d > x)
                std::fprintf(stderr,
                             "floorset: warning: d > X, no element of S(X) exceeds X\n");
            auto rep = floorset::divisibility_report(x, d);
            cli::Fields f;
            f.u64("x", rep.x);
            f.u64("d", rep.d);
            f.u64("cardinality", rep.cardinality);
            f.u64("lower_exact", rep.lower_bound_exact);
            f.u64("upper_exact", rep.upper_bound_exact);
            f.real("ratio_expected", rep.ratio_to_expected);
            f.real("loose_lower", rep.loose_lower);
            f.real("loose_upper", rep.loose_upper);
            print_record(f, fmt);
            return 0;
        }
        if (psi_cmd->parsed()) {
            auto led = floorset::build_ledger(x, d);
            cli::Fields f;
            f.u64("x", led.x);
            f.u64("d", led.d);
            f.u64("r_max", led.r_max);
            f.real("leading_term", led.leading_term);
            f.real("s1_sum", led.s1_term_sum);
            f.real("psi_sum", led.psi_double_sum);
            f.u64("sd_plus", led.sd_plus_count);
            f.u64("sd_minus", led.sd_minus_count);
            f.u64("exact_card", led.exact_cardinality);
            f.real("residual", led.residual);
            f.real("conj_ratio", led.psi_double_sum * 3.0 * static_cast<double>(led.d) /
                                     (2.0 * std::sqrt(static_cast<double>(led.x))));
            f.str("j_range", floorset::kJRangeConvention);
            print_record(f, fmt);
            return 0;
        }
        if (classify_cmd->parsed()) {
            auto rep = floorset::classify_set(x);
            cli::Fields f;
            f.u64("x", rep.x);
            f.u64("units", rep.units);
            f.u64("primes", rep.primes);
            f.u64("semiprimes", rep.semiprimes);
            f.u64("other", rep.other);
            f.u64("total", rep.total);
            print_record(f, fmt);
            return 0;
        }
        if (divsum->parsed()) {
            auto rep = floorset::divisor_summatory(x);
            cli::Fields f;
            f.u64("x", rep.x);
            f.u128("exact_sum", rep.exact_sum);
            f.real("asym_main", rep.asymptotic_main);
            f.real("abs_error", rep.abs_error);
            print_record(f, fmt);
            return 0;
        }
        if (sweep->parsed()) {
            cfg.format = fmt;
            cfg.oracle_cap = oracle_cap;
            cfg.points = points;
            cfg.checks = cli::parse_checks(checks_arg);
            cfg.d_list.clear();
            std::size_t pos = 0;
            while (pos <= d_arg.size()) {
                std::size_t comma = d_arg.find(',', pos);
                std::string tok = d_arg.substr(
                    pos, comma == std::string::npos ? std::string::npos : comma - pos);
                if (!tok.empty()) {
                    std::size_t used = 0;
                    unsigned long long v = std::stoull(tok, &used);
                    if (used != tok.size() || v == 0)
                        throw std::invalid_argument("--d entries must be integers >= 1");
                    cfg.d_list.push_back(v);
                }
                if (comma == std::string::npos) break;
                pos = comma + 1;
            }
            std::sort(cfg.d_list.begin(), cfg.d_list.end());
            cfg.d_list.erase(std::unique(cfg.d_list.begin(), cfg.d_list.end()),
                             cfg.d_list.end());
            if (cfg.log_spaced && cfg.points == 0)
                throw std::invalid_argument("--log requires --points");
            if (cfg.points > 0 && sweep->count("--step") > 0)
                throw std::invalid_argument("--step and --points are mutually exclusive");
            std::uint64_t failures = cli::run_sweep(cfg);
            if (failures > 0) {
                std::fprintf(stderr, "floorset: %llu check evaluation(s) failed\n",
                             static_cast<unsigned long long>(failures));
                return 1;
            }
            return 0;
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "floorset: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "floorset: internal error: %s\n", e.what());
        return 2;
    }
    return 2;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
