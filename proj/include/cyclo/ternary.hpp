#pragma once

// Order-three coefficient engine. For odd primes p < q < r the
// coefficient c_i is the sum of d_m * chi_{m*r}(i) over the +-1 support
// of the order-two polynomial, restricted to terms with
// m*r + p + q >= i + 1 + p*q. The threshold uses the actual integer i,
// not its residue, so the full-vector path walks i downward, activating
// each support term once i falls to m*r + p + q - p*q - 1 and folding
// its two chi windows into cyclic difference arrays that are re-anchored
// every p*q indices. A per-term evaluation of the same sum is kept as
// the reference path.

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclo/binary_support.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

struct TernaryTriple {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t q_p_star = 0; // inverse of q mod p, in (0, p)
    std::int64_t r_p_star = 0; // inverse of r mod p, in (0, p)
    std::int64_t p_q_star = 0; // inverse of p mod q, in (0, q)
    std::int64_t q_bar_p = 0;  // residue of q mod p, in (0, p)
    std::int64_t phi = 0;      // (p-1)(q-1)(r-1)

    std::int64_t n() const { return p * q * r; }

    // Validates odd primes p < q < r and that p*q*r and phi fit in
    // signed 64-bit. Throws std::invalid_argument otherwise.
    static TernaryTriple make(std::int64_t p, std::int64_t q, std::int64_t r);
};

struct HeightReport {
    TernaryTriple triple;
    std::int64_t height = 0;           // max |c_i|
    std::int64_t witness_exponent = 0; // smallest i with |c_i| = height
    std::optional<std::int64_t> partial_sum_max; // filled on request
};

enum class ClassKind { Special, Plain, Null };

struct ClassWitness {
    std::int64_t u;        // the u (or u') index
    std::int64_t exponent; // the support exponent it generates
};

struct ClassInfo {
    std::int64_t label = 0; // v in [0, q_p_star) or v' in [q_p_star, p)
    bool mirrored = false;  // true for the v' side (negative-coefficient classes)
    ClassKind kind = ClassKind::Null;
    // Witness with exponent >= j carrying the required kernel sign
    // (-1 on the plain side, +1 on the mirrored side), and the one with
    // exponent < j carrying the opposite sign. Smallest u wins.
    std::optional<ClassWitness> ge_witness;
    std::optional<ClassWitness> lt_witness;
};

struct ClassPartition {
    std::int64_t i = 0;
    std::int64_t j = 0;
    std::vector<ClassInfo> classes;     // exactly p entries, label ascending
    std::vector<std::int64_t> special;  // labels, ascending
    std::vector<std::int64_t> plain;    // labels, ascending
    std::vector<std::int64_t> null_;    // labels, ascending
};

// Reference path: evaluates the thresholded sum term by term.
// i outside [0, phi] yields 0. Throws std::invalid_argument when s was
// built for a different (p, q).
std::int64_t ternary_coefficient(const TernaryTriple& t, const SparseBinarySupport& s,
                                 std::int64_t i);

// Fast path: the full vector for i in [0, phi] via windowed difference
// arrays. Throws ResourceLimitError when phi exceeds the cap
// (max_degree <= 0 means the configured engine cap).
DensePoly32 ternary_all_coefficients(const TernaryTriple& t, const SparseBinarySupport& s,
                                     std::int64_t max_degree = 0);

// Height, smallest witness exponent, and optionally the truncated-sum
// maximum that dominates the height.
HeightReport height(const TernaryTriple& t, const SparseBinarySupport& s,
                    bool with_partial_sum = false, std::int64_t max_degree = 0);

// The untruncated sum of d_m * chi_{m*r}(i) over the whole support.
// Always 0; exposed so the vanishing can be checked rather than assumed.
std::int64_t zero_sum_residual(const TernaryTriple& t, const SparseBinarySupport& s,
                               std::int64_t i);

// max over residues of i and truncation points j of
// |sum_{m >= j} d_m * chi_{m*r}(i)|. The summand depends on i only
// through its residue mod p*q and on j only through which support
// exponents clear it, so scanning residues against suffix sums over the
// sorted support is an exact search.
std::int64_t max_partial_sum(const TernaryTriple& t, const SparseBinarySupport& s);

// Partitions the p residue classes of the support into special, plain
// and null relative to the cut j and the kernel signs at i.
ClassPartition classify_classes(const TernaryTriple& t, const SparseBinarySupport& s,
                                std::int64_t i, std::int64_t j);

} // namespace cyclo
