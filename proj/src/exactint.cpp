#include "floorset/exactint.hpp"

#include <bit>
#include <stdexcept>

namespace floorset {

std::uint64_t isqrt(std::uint64_t y) noexcept {
    if (y < 2) return y;
    // Seed 2^ceil(bit_width/2) >= sqrt(y); Newton from above is monotone
    // decreasing, so stopping at the first non-decrease lands within one
    // step of the floor root.
    std::uint64_t s = std::uint64_t{1} << ((std::bit_width(y) + 1) / 2);
    while (true) {
        std::uint64_t t = (s + y / s) / 2;
        if (t >= s) break;
        s = t;
    }
    // Exact correction with double-width squares (y may exceed 2^62 here).
    while (uint128{s} * s > y) --s;
    while (uint128{s + 1} * (s + 1) <= y) ++s;
    return s;
}

std::uint64_t icbrt(std::uint64_t y) noexcept {
    if (y < 8) return y == 0 ? 0 : 1;
    std::uint64_t s = std::uint64_t{1} << ((std::bit_width(y) + 2) / 3);
    while (true) {
        std::uint64_t t = (2 * s + y / (s * s)) / 3;
        if (t >= s) break;
        s = t;
    }
    while (uint128{s} * s * s > y) --s;
    while (uint128{s + 1} * (s + 1) * (s + 1) <= y) ++s;
    return s;
}

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) noexcept {
    uint128 p = uint128{a} * b;
    if (p > ~std::uint64_t{0}) return std::nullopt;
    return static_cast<std::uint64_t>(p);
}

std::uint64_t ceil_div(std::uint64_t num, std::uint64_t den) noexcept {
    if (num == 0) return 0;
    return 1 + (num - 1) / den;
}

void validate_x(std::uint64_t x) {
    if (x == 0) throw std::invalid_argument("X must satisfy X >= 1");
    if (x > kMaxX)
        throw std::invalid_argument("X exceeds the supported maximum 2^62 = 4611686018427387904");
}

std::string to_decimal(uint128 v) {
    if (v == 0) return "0";
    char buf[40];
    int pos = 40;
    while (v != 0) {
        buf[--pos] = static_cast<char>('0' + static_cast<unsigned>(v % 10));
        v /= 10;
    }
    return std::string(buf + pos, buf + 40);
}

}  // namespace floorset
