#pragma once

// Sparse structure of the order-two polynomial over primes p < q: every
// coefficient is +1, -1 or 0, and the +-1 exponents are generated
// explicitly from the constrained inverses p_q_star and q_p_star. The
// +1 exponents are u*p + v*q with u in [0, p_q_star-1], v in
// [0, q_p_star-1]; the -1 exponents are u'*p + v'*q - p*q with
// u' in [p_q_star, q-1], v' in [q_p_star, p-1].

#include <cstdint>
#include <vector>

#include "cyclo/poly.hpp"

namespace cyclo {

struct SparseBinarySupport {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t p_q_star = 0; // inverse of p mod q, in (0, q)
    std::int64_t q_p_star = 0; // inverse of q mod p, in (0, p)

    std::vector<std::int64_t> plus_support;  // sorted ascending
    std::vector<std::int64_t> minus_support; // sorted ascending

    struct Term {
        std::int64_t exponent;
        std::int32_t sign; // +1 or -1
    };
    // Both supports merged, sorted ascending by exponent. Kept sorted so
    // the ternary engine can binary-search its activation cutoff instead
    // of materializing a full coefficient table.
    std::vector<Term> terms;

    std::int64_t degree() const { return (p - 1) * (q - 1); }
};

// Builds the support sets for odd primes p < q.
// Throws std::invalid_argument for non-primes, even inputs or p >= q.
SparseBinarySupport lam_leung_support(std::int64_t p, std::int64_t q);

// Coefficient d_m in {-1, 0, +1}; out-of-range m yields 0.
int binary_coefficient(const SparseBinarySupport& s, std::int64_t m);

// Expands the support to a dense vector of length (p-1)(q-1)+1.
DensePoly binary_dense(const SparseBinarySupport& s);

} // namespace cyclo
