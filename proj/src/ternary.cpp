#include "cyclo/ternary.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo/chi.hpp"
#include "cyclo/config.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {
namespace {

void require_matching(const TernaryTriple& t, const SparseBinarySupport& s) {
    if (t.p != s.p || t.q != s.q) {
        throw std::invalid_argument("ternary: support built for (" + std::to_string(s.p) + "," +
                                    std::to_string(s.q) + ") but triple has (" +
                                    std::to_string(t.p) + "," + std::to_string(t.q) + ")");
    }
}

// Per-term data for the windowed paths: the last i at which the term is
// active, and where its two chi windows start over the residues of i.
struct WindowedTerm {
    std::int64_t threshold;
    std::int64_t plus_start;
    std::int64_t minus_start;
    std::int32_t sign;
};

std::vector<WindowedTerm> windowed_terms(const TernaryTriple& t, const SparseBinarySupport& s) {
    const std::int64_t pq = t.p * t.q;
    std::vector<WindowedTerm> out;
    out.reserve(s.terms.size());
    for (const auto& term : s.terms) {
        const std::int64_t mr = term.exponent * t.r;
        out.push_back({mr + t.p + t.q - pq - 1, bar(mr + t.q, pq), bar(mr, pq), term.sign});
    }
    return out; // ascending exponent implies ascending threshold
}

int window_sign(const WindowedTerm& w, std::int64_t ibar, std::int64_t p, std::int64_t pq) {
    std::int64_t off = ibar - w.plus_start;
    if (off < 0) off += pq;
    if (off < p) return 1;
    off = ibar - w.minus_start;
    if (off < 0) off += pq;
    if (off < p) return -1;
    return 0;
}

} // namespace

TernaryTriple TernaryTriple::make(std::int64_t p, std::int64_t q, std::int64_t r) {
    if (p < 3 || q <= p || r <= q || !is_prime(p) || !is_prime(q) || !is_prime(r)) {
        throw std::invalid_argument("TernaryTriple: need odd primes p < q < r, got (" +
                                    std::to_string(p) + "," + std::to_string(q) + "," +
                                    std::to_string(r) + ")");
    }
    std::int64_t pq = 0, pqr = 0;
    if (__builtin_mul_overflow(p, q, &pq) || __builtin_mul_overflow(pq, r, &pqr)) {
        throw std::invalid_argument("TernaryTriple: p*q*r exceeds the 64-bit range");
    }

    TernaryTriple t;
    t.p = p;
    t.q = q;
    t.r = r;
    t.q_p_star = mod_inverse_in_range(q, p);
    t.r_p_star = mod_inverse_in_range(r, p);
    t.p_q_star = mod_inverse_in_range(p, q);
    t.q_bar_p = bar(q, p);
    t.phi = (p - 1) * (q - 1) * (r - 1);
    return t;
}

std::int64_t ternary_coefficient(const TernaryTriple& t, const SparseBinarySupport& s,
                                 std::int64_t i) {
    require_matching(t, s);
    if (i < 0 || i > t.phi) return 0;

    const ChiContext ctx = ChiContext::make(t.p, t.q);
    // m*r + p + q >= i + 1 + p*q, i.e. m >= ceil((i + 1 + p*q - p - q) / r).
    const std::int64_t cut = i + 1 + t.p * t.q - t.p - t.q;
    const std::int64_t m_min = (cut + t.r - 1) / t.r;
    auto it = std::lower_bound(
        s.terms.begin(), s.terms.end(), m_min,
        [](const SparseBinarySupport::Term& term, std::int64_t v) { return term.exponent < v; });

    std::int64_t sum = 0;
    for (; it != s.terms.end(); ++it) {
        sum += it->sign * chi(ctx, it->exponent * t.r, i);
    }
    return sum;
}

DensePoly32 ternary_all_coefficients(const TernaryTriple& t, const SparseBinarySupport& s,
                                     std::int64_t max_degree) {
    require_matching(t, s);
    const std::int64_t cap = max_degree > 0 ? max_degree : engine_degree_cap();
    if (t.phi > cap) {
        throw ResourceLimitError("ternary_all_coefficients: degree " + std::to_string(t.phi) +
                                 " exceeds cap " + std::to_string(cap));
    }

    const std::int64_t p = t.p;
    const std::int64_t pq = t.p * t.q;
    const std::int64_t phi = t.phi;
    const std::vector<WindowedTerm> terms = windowed_terms(t, s);

    std::vector<std::int32_t> c(static_cast<std::size_t>(phi) + 1, 0);
    // Difference array of all fully active windows, prefix-summed into
    // `anchored` at the start of each pq-aligned block.
    std::vector<std::int64_t> full_diff(static_cast<std::size_t>(pq) + 1, 0);
    std::vector<std::int64_t> anchored(static_cast<std::size_t>(pq), 0);
    std::vector<std::int64_t> block_diff(static_cast<std::size_t>(pq) + 1, 0);

    const auto add_cyclic = [&](std::vector<std::int64_t>& diff, std::int64_t start,
                                std::int64_t weight) {
        const std::int64_t end = start + p;
        if (end <= pq) {
            diff[static_cast<std::size_t>(start)] += weight;
            diff[static_cast<std::size_t>(end)] -= weight;
        } else {
            diff[static_cast<std::size_t>(start)] += weight;
            diff[static_cast<std::size_t>(pq)] -= weight;
            diff[0] += weight;
            diff[static_cast<std::size_t>(end - pq)] -= weight;
        }
    };
    // Same, but only the part of the window with residue <= last.
    const auto add_clipped = [&](std::vector<std::int64_t>& diff, std::int64_t start,
                                 std::int64_t last, std::int64_t weight) {
        const auto add_linear = [&](std::int64_t a, std::int64_t b) { // [a, b)
            b = std::min(b, last + 1);
            if (a < b) {
                diff[static_cast<std::size_t>(a)] += weight;
                diff[static_cast<std::size_t>(b)] -= weight;
            }
        };
        const std::int64_t end = start + p;
        if (end <= pq) {
            add_linear(start, end);
        } else {
            add_linear(start, pq);
            add_linear(0, end - pq);
        }
    };

    // Walk pq-aligned blocks of i from the top down. A term is "full"
    // for a block when its threshold covers the whole block, "partial"
    // when the threshold lands inside it.
    std::ptrdiff_t next = static_cast<std::ptrdiff_t>(terms.size()) - 1;
    for (std::int64_t block = phi / pq; block >= 0; --block) {
        const std::int64_t i_lo = block * pq;
        const std::int64_t i_hi = std::min(phi, i_lo + pq - 1);

        while (next >= 0 && terms[static_cast<std::size_t>(next)].threshold >= i_hi) {
            const auto& w = terms[static_cast<std::size_t>(next)];
            add_cyclic(full_diff, w.plus_start, w.sign);
            add_cyclic(full_diff, w.minus_start, -w.sign);
            --next;
        }
        std::int64_t acc = 0;
        for (std::int64_t k = 0; k < pq; ++k) {
            acc += full_diff[static_cast<std::size_t>(k)];
            anchored[static_cast<std::size_t>(k)] = acc;
        }

        bool any_partial = false;
        for (std::ptrdiff_t part = next;
             part >= 0 && terms[static_cast<std::size_t>(part)].threshold >= i_lo; --part) {
            const auto& w = terms[static_cast<std::size_t>(part)];
            if (!any_partial) {
                std::fill(block_diff.begin(), block_diff.end(), 0);
                any_partial = true;
            }
            const std::int64_t last = w.threshold - i_lo; // in [0, pq-1)
            add_clipped(block_diff, w.plus_start, last, w.sign);
            add_clipped(block_diff, w.minus_start, last, -w.sign);
        }

        if (any_partial) {
            std::int64_t acc2 = 0;
            for (std::int64_t k = 0; k <= i_hi - i_lo; ++k) {
                acc2 += block_diff[static_cast<std::size_t>(k)];
                c[static_cast<std::size_t>(i_lo + k)] =
                    static_cast<std::int32_t>(anchored[static_cast<std::size_t>(k)] + acc2);
            }
        } else {
            for (std::int64_t k = 0; k <= i_hi - i_lo; ++k) {
                c[static_cast<std::size_t>(i_lo + k)] =
                    static_cast<std::int32_t>(anchored[static_cast<std::size_t>(k)]);
            }
        }
    }
    return DensePoly32(std::move(c));
}

HeightReport height(const TernaryTriple& t, const SparseBinarySupport& s, bool with_partial_sum,
                    std::int64_t max_degree) {
    const DensePoly32 poly = ternary_all_coefficients(t, s, max_degree);
    HeightReport report;
    report.triple = t;
    report.height = poly.max_abs();
    report.witness_exponent = poly.first_exponent_with_abs(report.height);
    if (with_partial_sum) report.partial_sum_max = max_partial_sum(t, s);
    return report;
}

std::int64_t zero_sum_residual(const TernaryTriple& t, const SparseBinarySupport& s,
                               std::int64_t i) {
    require_matching(t, s);
    const ChiContext ctx = ChiContext::make(t.p, t.q);
    std::int64_t sum = 0;
    for (const auto& term : s.terms) {
        sum += term.sign * chi(ctx, term.exponent * t.r, i);
    }
    return sum;
}

std::int64_t max_partial_sum(const TernaryTriple& t, const SparseBinarySupport& s) {
    require_matching(t, s);
    const std::int64_t pq = t.p * t.q;
    const std::vector<WindowedTerm> terms = windowed_terms(t, s);

    // Suffix sums over the support, largest exponent first: each prefix
    // of that walk realizes one truncation point j, and the empty and
    // full sums come along for free (the full one vanishes).
    std::int64_t best = 0;
    for (std::int64_t ibar = 0; ibar < pq; ++ibar) {
        std::int64_t sum = 0;
        for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
            sum += it->sign * window_sign(*it, ibar, t.p, pq);
            const std::int64_t mag = sum < 0 ? -sum : sum;
            if (mag > best) best = mag;
        }
    }
    return best;
}

ClassPartition classify_classes(const TernaryTriple& t, const SparseBinarySupport& s,
                                std::int64_t i, std::int64_t j) {
    require_matching(t, s);
    const ChiContext ctx = ChiContext::make(t.p, t.q);
    const std::int64_t pq = t.p * t.q;

    ClassPartition partition;
    partition.i = i;
    partition.j = j;
    partition.classes.reserve(static_cast<std::size_t>(t.p));

    const auto classify = [&](std::int64_t label, bool mirrored) {
        ClassInfo info;
        info.label = label;
        info.mirrored = mirrored;
        const std::int64_t u_lo = mirrored ? s.p_q_star : 0;
        const std::int64_t u_hi = mirrored ? t.q - 1 : s.p_q_star - 1;
        const int ge_sign = mirrored ? 1 : -1; // chi sign required at exponents >= j
        for (std::int64_t u = u_lo; u <= u_hi; ++u) {
            const std::int64_t e = u * t.p + label * t.q - (mirrored ? pq : 0);
            const int sign = chi(ctx, e * t.r, i);
            if (e >= j && sign == ge_sign && !info.ge_witness) {
                info.ge_witness = ClassWitness{u, e};
            } else if (e < j && sign == -ge_sign && !info.lt_witness) {
                info.lt_witness = ClassWitness{u, e};
            }
        }
        if (info.ge_witness && info.lt_witness) {
            info.kind = ClassKind::Special;
        } else if (info.ge_witness || info.lt_witness) {
            info.kind = ClassKind::Plain;
        } else {
            info.kind = ClassKind::Null;
        }
        partition.classes.push_back(info);
        auto& bucket = info.kind == ClassKind::Special ? partition.special
                       : info.kind == ClassKind::Plain ? partition.plain
                                                       : partition.null_;
        bucket.push_back(label);
    };

    for (std::int64_t v = 0; v < t.q_p_star; ++v) classify(v, false);
    for (std::int64_t v = t.q_p_star; v < t.p; ++v) classify(v, true);
    return partition;
}

} // namespace cyclo
