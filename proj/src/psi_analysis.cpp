#include "floorset/psi_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "floorset/divisibility.hpp"
#include "floorset/floorset.hpp"

namespace floorset {

namespace {

// Neumaier-compensated accumulator; the sums have up to ~sqrt(X) O(1) terms,
// where naive accumulation visibly loses digits by X = 10^12.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double v) {
        double t = sum + v;
        if (std::fabs(sum) >= std::fabs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }

    double value() const { return sum + comp; }
};

void validate_d(std::uint64_t d) {
    if (d == 0) throw std::invalid_argument("d must satisfy d >= 1");
}

// Visits the (r, j) lattice in fixed ascending order.  Row r spans integer
// j in [max(1, ceil((X-r)/(r*d))), floor(X/(r*d))]; once r*d > X that row
// and every later one is empty.
template <typename CellFn>
void for_each_cell(std::uint64_t x, std::uint64_t d, CellFn&& fn) {
    std::uint64_t r_max = floor_b(x) + 1;
    for (std::uint64_t r = 1; r <= r_max; ++r) {
        if (r > x / d) break;
        std::uint64_t rd = r * d;  // fits: rd <= x <= 2^62
        std::uint64_t hi = x / rd;
        std::uint64_t lo = std::max<std::uint64_t>(1, ceil_div(x - r, rd));
        for (std::uint64_t j = lo; j <= hi; ++j) fn(j);
    }
}

}  // namespace

double psi(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw std::invalid_argument("psi: denominator must be >= 1");
    return static_cast<double>(num % den) / static_cast<double>(den) - 0.5;
}

double lemma_double_sum(std::uint64_t x, std::uint64_t d) {
    validate_x(x);
    validate_d(d);
    CompensatedSum acc;
    for_each_cell(x, d, [&](std::uint64_t j) {
        std::uint64_t dj = d * j;  // dj <= X by the row bound
        acc.add(psi(x, dj + 1) - psi(x, dj));
    });
    return acc.value();
}

double s1_term_sum(std::uint64_t x, std::uint64_t d) {
    validate_x(x);
    validate_d(d);
    CompensatedSum acc;
    for_each_cell(x, d, [&](std::uint64_t j) {
        std::uint64_t dj = d * j;
        // X/(d*j) - X/(d*j+1) = X / (d*j * (d*j+1)), one rounding instead of two
        acc.add(static_cast<double>(x) /
                (static_cast<double>(dj) * (static_cast<double>(dj) + 1.0)));
    });
    return acc.value();
}

PsiLedger build_ledger(std::uint64_t x, std::uint64_t d) {
    validate_x(x);
    validate_d(d);
    if (d > x) throw std::invalid_argument("build_ledger requires d <= X");

    PsiLedger led{};
    led.x = x;
    led.d = d;
    std::uint64_t bf = floor_b(x);
    led.r_max = bf + 1;
    led.leading_term = 4.0 * std::sqrt(static_cast<double>(x)) / (3.0 * static_cast<double>(d));
    led.s1_term_sum = s1_term_sum(x, d);
    led.psi_double_sum = lemma_double_sum(x, d);
    led.sd_plus_count = bf / d;
    led.sd_minus_count = 0;
    for (const QuotientBlock& blk : BlockRange(x)) {
        if (blk.n_lo > bf + 1) break;
        if (blk.v % d == 0) ++led.sd_minus_count;
    }
    led.exact_cardinality = sd_cardinality(x, d);
    led.residual = static_cast<double>(led.exact_cardinality) - led.leading_term -
                   led.psi_double_sum;
    return led;
}

}  // namespace floorset
