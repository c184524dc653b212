#include "cyclo/oracle.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo/config.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {
namespace {

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
    std::int64_t out;
    if (__builtin_sub_overflow(a, b, &out)) {
        throw InternalError("oracle: 64-bit coefficient overflow");
    }
    return out;
}

// c *= (x^d - 1), in place.
void multiply_by_factor(std::vector<std::int64_t>& c, std::int64_t d) {
    const std::int64_t n = static_cast<std::int64_t>(c.size());
    c.resize(static_cast<std::size_t>(n + d), 0);
    for (std::int64_t i = n + d - 1; i >= 0; --i) {
        const std::int64_t shifted = (i >= d) ? c[static_cast<std::size_t>(i - d)] : 0;
        c[static_cast<std::size_t>(i)] = checked_sub(shifted, c[static_cast<std::size_t>(i)]);
    }
}

// c /= (x^d - 1), in place; the division must be exact.
void divide_by_factor(std::vector<std::int64_t>& c, std::int64_t d) {
    const std::int64_t deg = static_cast<std::int64_t>(c.size()) - 1;
    if (deg < d) throw InternalError("oracle: quotient degree would be negative");
    // From R = Q*x^d - Q: Q[i] = Q[i-d] - R[i], ascending i.
    for (std::int64_t i = 0; i + d <= deg; ++i) {
        const std::int64_t prev = (i >= d) ? c[static_cast<std::size_t>(i - d)] : 0;
        c[static_cast<std::size_t>(i)] = checked_sub(prev, c[static_cast<std::size_t>(i)]);
    }
    // Positions above the quotient degree must reproduce the dividend
    // exactly; anything else means the division was not exact.
    for (std::int64_t i = deg - d + 1; i <= deg; ++i) {
        if (c[static_cast<std::size_t>(i)] != c[static_cast<std::size_t>(i - d)]) {
            throw InternalError("oracle: nonzero remainder dividing by x^" +
                                std::to_string(d) + "-1");
        }
    }
    c.resize(static_cast<std::size_t>(deg - d + 1));
}

} // namespace

DensePoly cyclotomic_oracle(std::int64_t n, std::int64_t max_degree) {
    if (n < 1) throw std::invalid_argument("cyclotomic_oracle: n must be >= 1");
    const std::int64_t cap = max_degree > 0 ? max_degree : oracle_degree_cap();
    const std::int64_t degree = euler_phi(n); // phi(1) = 1 = deg(x - 1)
    if (degree > cap) {
        throw ResourceLimitError("cyclotomic_oracle: degree " + std::to_string(degree) +
                                 " exceeds cap " + std::to_string(cap));
    }

    // Phi_n = prod over squarefree s | rad(n) of (x^{n/s} - 1)^{mobius(s)}.
    // All sign +1 factors are multiplied first so that every subsequent
    // division is a division of a genuine polynomial multiple.
    std::vector<std::int64_t> distinct_primes;
    for (const auto& [prime, mult] : factorize(n)) distinct_primes.push_back(prime);

    std::vector<std::int64_t> numerator_degrees;
    std::vector<std::int64_t> denominator_degrees;
    const std::size_t k = distinct_primes.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        std::int64_t s = 1;
        int bits = 0;
        for (std::size_t b = 0; b < k; ++b) {
            if (mask & (std::size_t{1} << b)) {
                s *= distinct_primes[b];
                ++bits;
            }
        }
        ((bits % 2 == 0) ? numerator_degrees : denominator_degrees).push_back(n / s);
    }
    std::sort(numerator_degrees.begin(), numerator_degrees.end());
    std::sort(denominator_degrees.begin(), denominator_degrees.end(), std::greater<>());

    std::vector<std::int64_t> c{1};
    for (std::int64_t d : numerator_degrees) multiply_by_factor(c, d);
    for (std::int64_t d : denominator_degrees) divide_by_factor(c, d);

    DensePoly poly(std::move(c));
    if (poly.degree() != degree) {
        throw InternalError("cyclotomic_oracle: degree mismatch for n=" + std::to_string(n));
    }
    return poly;
}

std::int64_t height_oracle(std::int64_t n, std::int64_t max_degree) {
    return cyclotomic_oracle(n, max_degree).max_abs();
}

ReductionPlan reduce_to_kernel(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("reduce_to_kernel: n must be >= 1");
    ReductionPlan plan;
    plan.original_n = n;

    std::int64_t current = n;
    bool reduced = true;
    while (reduced) {
        reduced = false;
        for (const auto& [prime, mult] : factorize(current)) {
            if (mult > 1) {
                plan.steps.push_back({ReductionStep::Kind::AbsorbPrime, prime, current,
                                      current / prime});
                current /= prime;
                reduced = true;
                break; // refactorize; smallest repeated prime first
            }
        }
    }
    if (current % 2 == 0) {
        plan.steps.push_back({ReductionStep::Kind::HalveEven, 2, current, current / 2});
        current /= 2;
    }
    plan.kernel_n = current;
    return plan;
}

DensePoly reconstruct_from_kernel(const ReductionPlan& plan, const DensePoly& kernel_poly) {
    DensePoly poly = kernel_poly;
    for (auto it = plan.steps.rbegin(); it != plan.steps.rend(); ++it) {
        if (it->kind == ReductionStep::Kind::HalveEven) {
            if (it->to_n == 1) {
                // Phi_2 = x + 1; the sign-flip identity needs odd n >= 3.
                poly = DensePoly({1, 1});
                continue;
            }
            std::vector<std::int64_t> c(poly.coefficients().begin(), poly.coefficients().end());
            for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
            poly = DensePoly(std::move(c));
        } else {
            const std::int64_t stretch = it->prime;
            std::vector<std::int64_t> c(
                static_cast<std::size_t>(poly.degree() * stretch) + 1, 0);
            for (std::int64_t i = 0; i <= poly.degree(); ++i) {
                c[static_cast<std::size_t>(i * stretch)] = poly.at(i);
            }
            poly = DensePoly(std::move(c));
        }
    }
    return poly;
}

} // namespace cyclo
