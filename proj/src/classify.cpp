#include "floorset/classify.hpp"

#include <stdexcept>

#include "floorset/exactint.hpp"
#include "floorset/floorset.hpp"

namespace floorset {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) noexcept {
    return static_cast<std::uint64_t>(uint128{a} * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

constexpr std::uint64_t kSmallPrimes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                                          29, 31, 37, 41, 43, 47, 53, 59, 61};

// Deterministic witness set for all n < 2^64 (Sinclair's 7-base set).
constexpr std::uint64_t kWitnesses[] = {2,      325,     9375,      28178,
                                        450775, 9780504, 1795265022};

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t p : kSmallPrimes) {
        if (n % p == 0) return n == p;
    }
    if (n < 67 * 67) return true;

    std::uint64_t d = n - 1;
    int twos = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++twos;
    }
    for (std::uint64_t a : kWitnesses) {
        std::uint64_t w = a % n;
        if (w == 0) continue;
        std::uint64_t y = powmod(w, d, n);
        if (y == 1 || y == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < twos; ++i) {
            y = mulmod(y, y, n);
            if (y == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

const char* to_string(ValueClass c) noexcept {
    switch (c) {
        case ValueClass::unit: return "unit";
        case ValueClass::prime: return "prime";
        case ValueClass::semiprime: return "semiprime";
        case ValueClass::other: return "other";
    }
    return "?";
}

ValueClass classify_value(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("classify_value requires n >= 1");
    if (n == 1) return ValueClass::unit;
    if (is_prime(n)) return ValueClass::prime;

    // Composite.  Any prime factor p <= cbrt(n) leaves a cofactor n/p that is
    // prime exactly when n is a semiprime.
    std::uint64_t cb = icbrt(n);
    auto decided_by = [&](std::uint64_t p) {
        return is_prime(n / p) ? ValueClass::semiprime : ValueClass::other;
    };
    if (n % 2 == 0) return decided_by(2);
    if (n % 3 == 0) return decided_by(3);
    for (std::uint64_t p = 5; p <= cb; p += 6) {
        if (n % p == 0) return decided_by(p);
        if (p + 2 <= cb && n % (p + 2) == 0) return decided_by(p + 2);
    }

    // No factor up to the cube root: n is p^2 or p*q with both primes above
    // cbrt(n) (three such factors would exceed n).
    std::uint64_t s = isqrt(n);
    if (s * s == n) return is_prime(s) ? ValueClass::semiprime : ValueClass::other;
    return ValueClass::semiprime;
}

ClassificationReport classify_set(std::uint64_t x) {
    ClassificationReport rep{};
    rep.x = x;
    for (const QuotientBlock& blk : BlockRange(x)) {
        switch (classify_value(blk.v)) {
            case ValueClass::unit: ++rep.units; break;
            case ValueClass::prime: ++rep.primes; break;
            case ValueClass::semiprime: ++rep.semiprimes; break;
            case ValueClass::other: ++rep.other; break;
        }
        ++rep.total;
    }
    return rep;
}

}  // namespace floorset
