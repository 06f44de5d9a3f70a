// Primality and semiprimality classification of the block values of S(X).
//
// Primality is deterministic for every 64-bit input: trial division by the
// primes below 64, then a strong-probable-prime test against the published
// 7-base witness set {2, 325, 9375, 28178, 450775, 9780504, 1795265022}.
// Semiprime detection never fully factorises: trial division up to the cube
// root strips at most one factor, after which a single primality test (or a
// perfect-square check) on the cofactor decides.
#pragma once

#include <cstdint>

namespace floorset {

bool is_prime(std::uint64_t n) noexcept;

enum class ValueClass { unit, prime, semiprime, other };

const char* to_string(ValueClass c) noexcept;

// n = 1 -> unit; prime per is_prime; semiprime iff n = p*q with p, q prime
// (p = q allowed); other otherwise.  n = 0 is rejected.
ValueClass classify_value(std::uint64_t n);

struct ClassificationReport {
    std::uint64_t x;
    std::uint64_t units;  // count of the element 1 (always 1 for X >= 1)
    std::uint64_t primes;
    std::uint64_t semiprimes;
    std::uint64_t other;
    std::uint64_t total;  // |S(X)|
};

// Classifies each distinct block value of S(X); O(sqrt X) values.
ClassificationReport classify_set(std::uint64_t x);

}  // namespace floorset
