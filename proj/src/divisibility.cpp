#include "floorset/divisibility.hpp"

#include <cmath>
#include <stdexcept>

#include "floorset/floorset.hpp"

namespace floorset {

std::uint64_t sd_cardinality(std::uint64_t x, std::uint64_t d) {
    validate_x(x);
    if (d == 0) throw std::invalid_argument("d must satisfy d >= 1");
    if (d > x) return 0;
    std::uint64_t count = 0;
    for (const QuotientBlock& blk : BlockRange(x))
        if (blk.v % d == 0) ++count;
    return count;
}

std::uint64_t sd_brute(std::uint64_t x, std::uint64_t d, std::uint64_t oracle_cap) {
    if (d == 0) throw std::invalid_argument("d must satisfy d >= 1");
    std::uint64_t count = 0;
    for (std::uint64_t v : brute_force_set(x, oracle_cap))
        if (v % d == 0) ++count;
    return count;
}

DivisibilityReport divisibility_report(std::uint64_t x, std::uint64_t d) {
    DivisibilityReport rep{};
    rep.x = x;
    rep.d = d;
    rep.cardinality = sd_cardinality(x, d);
    rep.lower_bound_exact = floor_b(x) / d;
    rep.upper_bound_exact = cardinality_closed(x);
    double sx = std::sqrt(static_cast<double>(x));
    rep.ratio_to_expected = static_cast<double>(rep.cardinality) * static_cast<double>(d) / sx;
    rep.loose_lower = sx / static_cast<double>(d);
    rep.loose_upper = static_cast<double>(x) / 2.0;
    return rep;
}

DivisibilityReport trivial_bounds(std::uint64_t x, std::uint64_t d) {
    if (d < 2) throw std::invalid_argument("the bounds theorem requires d >= 2");
    return divisibility_report(x, d);
}

}  // namespace floorset
