#pragma once

// Independent brute-force route: computes the n-th cyclotomic polynomial
// as the product over squarefree s | rad(n) of (x^{n/s} - 1)^{mobius(s)},
// with every division performed exactly (a nonzero remainder throws).
// Deliberately simple so it can serve as ground truth for the windowed
// engine; no FFT, no clever factoring of the quotient chain.

#include <cstdint>
#include <vector>

#include "cyclo/poly.hpp"

namespace cyclo {

struct ReductionStep {
    enum class Kind {
        AbsorbPrime, // n had p^2 | n: coefficients of Phi_n are Phi_{n/p} spread by p
        HalveEven,   // n = 2*odd: coefficients of Phi_n are Phi_{n/2} with odd indices negated
    };
    Kind kind;
    std::int64_t prime;  // the prime removed (2 for HalveEven)
    std::int64_t from_n; // value before the step
    std::int64_t to_n;   // value after the step
};

// A(n)-preserving reduction from n to its odd squarefree core.
struct ReductionPlan {
    std::int64_t original_n = 1;
    std::int64_t kernel_n = 1;
    std::vector<ReductionStep> steps; // in the order they were applied
};

// Exact integer coefficients of Phi_n. Throws std::invalid_argument for
// n < 1 and ResourceLimitError when euler_phi(n) exceeds the cap
// (max_degree <= 0 means the configured oracle cap).
DensePoly cyclotomic_oracle(std::int64_t n, std::int64_t max_degree = 0);

// Largest absolute coefficient of Phi_n.
std::int64_t height_oracle(std::int64_t n, std::int64_t max_degree = 0);

// Strips repeated prime factors, then a single factor of 2. The height
// is invariant at every step.
ReductionPlan reduce_to_kernel(std::int64_t n);

// Inverse of reduce_to_kernel on coefficient vectors: given Phi of the
// plan's kernel, rebuilds Phi of the original n by replaying the steps
// backwards (spread by p, negate odd indices).
DensePoly reconstruct_from_kernel(const ReductionPlan& plan, const DensePoly& kernel_poly);

} // namespace cyclo
