#pragma once

// Modular residue utilities shared by every other component: the
// canonical non-negative residue, constrained modular inverses, the
// Mobius and totient functions, and a deterministic prime sieve.

#include <cstdint>
#include <utility>
#include <vector>

namespace cyclo {

// Canonical residue of n in [0, modulus). Works for negative n.
// Throws std::invalid_argument when modulus < 1.
std::int64_t bar(std::int64_t n, std::int64_t modulus);

// A value paired with the modulus it lives under. Construction normalizes,
// so 0 <= value < modulus always holds.
struct ResiduePair {
    std::int64_t modulus = 1;
    std::int64_t value = 0;

    static ResiduePair of(std::int64_t n, std::int64_t modulus);
};

// The unique x with 0 < x < m and a*x == 1 (mod m), found by extended
// Euclid so that composite moduli work too. Throws NoInverseError when
// gcd(a, m) != 1, std::invalid_argument when m < 2.
std::int64_t mod_inverse_in_range(std::int64_t a, std::int64_t m);

// Mobius function. Throws std::invalid_argument when n < 1.
int mobius(std::int64_t n);

// Euler totient. Throws std::invalid_argument when n < 1.
std::int64_t euler_phi(std::int64_t n);

// All primes <= limit, ascending. Empty for limit < 2.
std::vector<std::int64_t> primes_up_to(std::int64_t limit);

// Deterministic trial-division primality check.
bool is_prime(std::int64_t n);

// Prime factorization as (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t gcd64(std::int64_t a, std::int64_t b);

} // namespace cyclo
