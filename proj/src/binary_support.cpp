#include "cyclo/binary_support.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

SparseBinarySupport lam_leung_support(std::int64_t p, std::int64_t q) {
    if (p < 3 || q <= p || !is_prime(p) || !is_prime(q)) {
        throw std::invalid_argument("lam_leung_support: need odd primes p < q, got p=" +
                                    std::to_string(p) + " q=" + std::to_string(q));
    }

    SparseBinarySupport s;
    s.p = p;
    s.q = q;
    s.p_q_star = mod_inverse_in_range(p, q);
    s.q_p_star = mod_inverse_in_range(q, p);

    s.plus_support.reserve(static_cast<std::size_t>(s.p_q_star * s.q_p_star));
    for (std::int64_t v = 0; v < s.q_p_star; ++v) {
        for (std::int64_t u = 0; u < s.p_q_star; ++u) {
            s.plus_support.push_back(u * p + v * q);
        }
    }
    s.minus_support.reserve(static_cast<std::size_t>((q - s.p_q_star) * (p - s.q_p_star)));
    const std::int64_t pq = p * q;
    for (std::int64_t v = s.q_p_star; v < p; ++v) {
        for (std::int64_t u = s.p_q_star; u < q; ++u) {
            s.minus_support.push_back(u * p + v * q - pq);
        }
    }
    std::sort(s.plus_support.begin(), s.plus_support.end());
    std::sort(s.minus_support.begin(), s.minus_support.end());

    s.terms.reserve(s.plus_support.size() + s.minus_support.size());
    auto a = s.plus_support.begin();
    auto b = s.minus_support.begin();
    while (a != s.plus_support.end() || b != s.minus_support.end()) {
        if (b == s.minus_support.end() || (a != s.plus_support.end() && *a < *b)) {
            s.terms.push_back({*a++, 1});
        } else {
            s.terms.push_back({*b++, -1});
        }
    }
    // The two supports are provably disjoint; a duplicate exponent here
    // would mean the inverses were computed wrong.
    for (std::size_t i = 1; i < s.terms.size(); ++i) {
        if (s.terms[i - 1].exponent == s.terms[i].exponent) {
            throw InternalError("lam_leung_support: overlapping supports at exponent " +
                                std::to_string(s.terms[i].exponent));
        }
    }
    return s;
}

int binary_coefficient(const SparseBinarySupport& s, std::int64_t m) {
    const auto it = std::lower_bound(
        s.terms.begin(), s.terms.end(), m,
        [](const SparseBinarySupport::Term& t, std::int64_t value) { return t.exponent < value; });
    if (it != s.terms.end() && it->exponent == m) return it->sign;
    return 0;
}

DensePoly binary_dense(const SparseBinarySupport& s) {
    std::vector<std::int64_t> coeffs(static_cast<std::size_t>(s.degree()) + 1, 0);
    for (const auto& term : s.terms) {
        coeffs[static_cast<std::size_t>(term.exponent)] = term.sign;
    }
    return DensePoly(std::move(coeffs));
}

} // namespace cyclo
