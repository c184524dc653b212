#pragma once

// Every named coefficient-height bound for an order-three triple, plus
// the flags a sweep cares about. The sharp cap floor(2p/3) is treated as
// unconditional: a height above it means the engine is broken, not that
// mathematics changed.

#include <cstdint>

#include "cyclo/ternary.hpp"

namespace cyclo {

struct BzdegaParams {
    std::int64_t alpha = 0;     // min{q_p*, r_p*, p - q_p*, p - r_p*}
    std::int64_t beta = 0;      // unique residue in (0, p) with alpha*beta*q*r == 1 (mod p)
    std::int64_t beta_star = 0; // min{beta, p - beta}
};

struct BoundsReport {
    std::int64_t bang = 0;              // p - 1
    std::int64_t beiter_classic = 0;    // p - floor(p/4)
    std::int64_t beiter_conjecture = 0; // (p+1)/2, kept for violation hunting
    std::int64_t corrected_beiter = 0;  // floor(2p/3)
    std::int64_t bzdega = 0;            // min{2*alpha + beta_star, p - beta_star}
    std::int64_t height = 0;
    bool beiter_violated = false;    // height > (p+1)/2; a finding, not an error
    bool corrected_violated = false; // height > floor(2p/3); always a defect
};

BzdegaParams bzdega_params(const TernaryTriple& t);

std::int64_t bzdega_bound(const TernaryTriple& t);

BoundsReport bounds_report(const TernaryTriple& t, std::int64_t height);

} // namespace cyclo
