#pragma once

// Dense polynomial value type: a coefficient vector indexed by exponent.
// The coefficient width is a template parameter because the brute-force
// route needs 64-bit intermediates while the ternary engine stores its
// outputs in 32 bits to keep sweep memory down.

#include <cstdint>
#include <cstdlib>
#include <span>
#include <utility>
#include <vector>

namespace cyclo {

template <typename Coeff>
class BasicDensePoly {
public:
    BasicDensePoly() = default;
    explicit BasicDensePoly(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {}

    // Highest stored exponent; -1 for an empty polynomial.
    std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }

    // Coefficient of x^i, zero outside the stored range.
    Coeff at(std::int64_t i) const {
        if (i < 0 || i > degree()) return Coeff{0};
        return coeffs_[static_cast<std::size_t>(i)];
    }

    std::span<const Coeff> coefficients() const { return coeffs_; }

    std::int64_t max_abs() const {
        std::int64_t best = 0;
        for (Coeff c : coeffs_) {
            const std::int64_t a = c < 0 ? -static_cast<std::int64_t>(c) : c;
            if (a > best) best = a;
        }
        return best;
    }

    // Smallest exponent whose coefficient has the given absolute value,
    // or -1 when none does.
    std::int64_t first_exponent_with_abs(std::int64_t value) const {
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            const std::int64_t a = coeffs_[i] < 0 ? -static_cast<std::int64_t>(coeffs_[i])
                                                  : coeffs_[i];
            if (a == value) return static_cast<std::int64_t>(i);
        }
        return -1;
    }

    bool operator==(const BasicDensePoly&) const = default;

private:
    std::vector<Coeff> coeffs_;
};

using DensePoly = BasicDensePoly<std::int64_t>;
using DensePoly32 = BasicDensePoly<std::int32_t>;

template <typename A, typename B>
bool same_coefficients(const BasicDensePoly<A>& a, const BasicDensePoly<B>& b) {
    if (a.degree() != b.degree()) return false;
    for (std::int64_t i = 0; i <= a.degree(); ++i) {
        if (static_cast<std::int64_t>(a.at(i)) != static_cast<std::int64_t>(b.at(i))) return false;
    }
    return true;
}

inline DensePoly widen(const DensePoly32& p) {
    std::vector<std::int64_t> c(p.coefficients().begin(), p.coefficients().end());
    return DensePoly(std::move(c));
}

} // namespace cyclo
