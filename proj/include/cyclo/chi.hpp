#pragma once

// The {0,+-1}-valued kernel chi_n over Z/(pq) that the ternary engine
// convolves against. chi_n(i) is +1 when bar(i+1) lies in the cyclic
// half-open interval (bar(n+q), bar(n+q)+p], -1 when bar(i+1) lies in
// (bar(n), bar(n)+p], and 0 otherwise. Both regions are cyclic windows
// of exactly p residues; chi() evaluates the case table literally and
// checks at runtime that the two regions never overlap, while
// chi_windows() returns the closed-form windows used by the fast path.

#include <cstdint>
#include <vector>

namespace cyclo {

struct ChiContext {
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t pq = 0;
    std::int64_t r_p_star = 0; // inverse of r mod p, in (0, p); 0 when r unknown

    static ChiContext make(std::int64_t p, std::int64_t q);
    static ChiContext make(std::int64_t p, std::int64_t q, std::int64_t r);
};

// Half-open cyclic run of `length` consecutive residues mod `modulus`
// starting at `start`.
struct CyclicWindow {
    std::int64_t start = 0;
    std::int64_t length = 0;
    std::int64_t modulus = 1;

    bool contains(std::int64_t residue) const {
        std::int64_t off = residue - start;
        if (off < 0) off += modulus;
        return off < length;
    }

    std::vector<std::int64_t> residues() const; // materialized, ascending
};

struct ChiWindows {
    CyclicWindow plus;  // residues i with chi_n(i) = +1
    CyclicWindow minus; // residues i with chi_n(i) = -1
};

// Case-table evaluation. Accepts any integers n, i; only their residues
// matter. Throws InternalError if both sign regions ever fire at once.
int chi(const ChiContext& ctx, std::int64_t n, std::int64_t i);

// Closed-form +-1 windows over the residues of i. Each has exactly p
// elements mod pq.
ChiWindows chi_windows(const ChiContext& ctx, std::int64_t n);

} // namespace cyclo
