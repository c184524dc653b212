#include "cyclo/verify.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cyclo/binary_support.hpp"
#include "cyclo/bounds.hpp"
#include "cyclo/chi.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/residue.hpp"
#include "cyclo/ternary.hpp"

namespace cyclo::verify {
namespace {

using Rng = std::mt19937_64;
using Outcome = std::optional<std::string>; // counterexample text; nullopt = pass

// std::uniform_int_distribution is implementation-defined; modulo
// reduction keeps reports byte-identical across toolchains.
std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return rng() % n; }

std::int64_t pick(Rng& rng, const std::vector<std::int64_t>& values) {
    return values[static_cast<std::size_t>(rand_below(rng, values.size()))];
}

std::int64_t rand_in(Rng& rng, std::int64_t lo, std::int64_t hi) { // inclusive
    return lo + static_cast<std::int64_t>(
                    rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

std::vector<std::pair<std::int64_t, std::int64_t>> odd_prime_pairs_up_to(std::int64_t pq_max) {
    std::vector<std::pair<std::int64_t, std::int64_t>> pairs;
    const auto primes = primes_up_to(pq_max / 3);
    for (std::size_t a = 0; a < primes.size(); ++a) {
        if (primes[a] < 3) continue;
        for (std::size_t b = a + 1; b < primes.size(); ++b) {
            if (primes[a] * primes[b] > pq_max) break;
            pairs.emplace_back(primes[a], primes[b]);
        }
    }
    return pairs;
}

std::vector<TernaryTriple> odd_prime_triples_up_to(std::int64_t pqr_max) {
    std::vector<TernaryTriple> triples;
    const auto primes = primes_up_to(pqr_max / 15);
    for (std::size_t a = 0; a < primes.size(); ++a) {
        if (primes[a] < 3) continue;
        for (std::size_t b = a + 1; b < primes.size(); ++b) {
            if (primes[a] * primes[b] * primes[b] > pqr_max) break;
            for (std::size_t c = b + 1; c < primes.size(); ++c) {
                if (primes[a] * primes[b] * primes[c] > pqr_max) break;
                triples.push_back(TernaryTriple::make(primes[a], primes[b], primes[c]));
            }
        }
    }
    return triples;
}

TernaryTriple random_triple(Rng& rng, std::int64_t p_max, std::int64_t q_max,
                            std::int64_t r_max) {
    const auto primes = primes_up_to(r_max);
    std::vector<std::int64_t> ps, qs, rs;
    for (std::int64_t v : primes) {
        if (v >= 3 && v <= p_max) ps.push_back(v);
    }
    const std::int64_t p = pick(rng, ps);
    for (std::int64_t v : primes) {
        if (v > p && v <= q_max) qs.push_back(v);
    }
    const std::int64_t q = pick(rng, qs);
    for (std::int64_t v : primes) {
        if (v > q) rs.push_back(v);
    }
    return TernaryTriple::make(p, q, pick(rng, rs));
}

std::string triple_tag(const TernaryTriple& t) {
    std::ostringstream os;
    os << "(" << t.p << "," << t.q << "," << t.r << ")";
    return os.str();
}

// ---------------------------------------------------------------- binary

Outcome prop_support_counts(Rng& rng) {
    auto pairs = odd_prime_pairs_up_to(3000);
    for (int extra = 0; extra < 25; ++extra) {
        const auto primes = primes_up_to(3000);
        std::int64_t p = 0, q = 0;
        do {
            p = pick(rng, primes);
            q = pick(rng, primes);
        } while (p < 3 || p >= q || p * q > 10000);
        pairs.emplace_back(p, q);
    }
    for (const auto& [p, q] : pairs) {
        const auto s = lam_leung_support(p, q);
        const auto plus = static_cast<std::int64_t>(s.plus_support.size());
        const auto minus = static_cast<std::int64_t>(s.minus_support.size());
        std::ostringstream os;
        if (plus != s.p_q_star * s.q_p_star) {
            os << "p=" << p << " q=" << q << " |plus|=" << plus << " expected "
               << s.p_q_star * s.q_p_star;
            return os.str();
        }
        if (minus != (q - s.p_q_star) * (p - s.q_p_star)) {
            os << "p=" << p << " q=" << q << " |minus|=" << minus;
            return os.str();
        }
        if (plus - minus != 1) {
            os << "p=" << p << " q=" << q << " count difference " << plus - minus << " != 1";
            return os.str();
        }
        for (const auto& term : s.terms) {
            if (term.exponent < 0 || term.exponent > s.degree()) {
                os << "p=" << p << " q=" << q << " exponent " << term.exponent
                   << " outside [0," << s.degree() << "]";
                return os.str();
            }
        }
        if (s.terms.back().exponent != s.degree() || s.terms.back().sign != 1) {
            os << "p=" << p << " q=" << q << " top term is not +1 at the degree";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_inverse_identity(Rng&) {
    for (const auto& [p, q] : odd_prime_pairs_up_to(4000)) {
        const std::int64_t p_q = mod_inverse_in_range(p, q);
        const std::int64_t q_p = mod_inverse_in_range(q, p);
        if ((p - 1) * (q - 1) != (p_q - 1) * p + (q_p - 1) * q) {
            std::ostringstream os;
            os << "p=" << p << " q=" << q << " (p-1)(q-1) != (p_q*-1)p + (q_p*-1)q";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_sign_alternation(Rng&) {
    for (const auto& [p, q] : odd_prime_pairs_up_to(3000)) {
        const auto dense = binary_dense(lam_leung_support(p, q));
        int last = -1; // nonzero run must start at +1
        for (std::int64_t i = 0; i <= dense.degree(); ++i) {
            const auto c = dense.at(i);
            if (c == 0) continue;
            if (c != -last) {
                std::ostringstream os;
                os << "p=" << p << " q=" << q << " sign does not alternate at exponent " << i;
                return os.str();
            }
            last = static_cast<int>(c);
        }
        if (last != 1) {
            std::ostringstream os;
            os << "p=" << p << " q=" << q << " leading coefficient is not +1";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_dense_matches_product_route(Rng& rng) {
    auto pairs = odd_prime_pairs_up_to(3000);
    const auto primes = primes_up_to(1500);
    for (int extra = 0; extra < 10; ++extra) {
        std::int64_t p = 0, q = 0;
        do {
            p = pick(rng, primes);
            q = pick(rng, primes);
        } while (p < 3 || p >= q || p * q > 10000);
        pairs.emplace_back(p, q);
    }
    for (const auto& [p, q] : pairs) {
        if (!same_coefficients(binary_dense(lam_leung_support(p, q)), cyclotomic_oracle(p * q))) {
            std::ostringstream os;
            os << "p=" << p << " q=" << q << " dense expansion disagrees with product route";
            return os.str();
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------------ chi

Outcome prop_window_consistency(Rng& rng) {
    const std::pair<std::int64_t, std::int64_t> small[] = {{3, 5}, {3, 7}, {5, 7}};
    for (const auto& [p, q] : small) {
        const auto ctx = ChiContext::make(p, q);
        for (std::int64_t n = 0; n < ctx.pq; ++n) {
            const auto w = chi_windows(ctx, n);
            for (std::int64_t i = 0; i < ctx.pq; ++i) {
                const int direct = chi(ctx, n, i);
                const int windowed = w.plus.contains(i) ? 1 : w.minus.contains(i) ? -1 : 0;
                if (direct != windowed) {
                    std::ostringstream os;
                    os << "p=" << p << " q=" << q << " n=" << n << " i=" << i << " case table "
                       << direct << " vs window " << windowed;
                    return os.str();
                }
            }
        }
    }
    const auto primes = primes_up_to(200);
    for (int round = 0; round < 20; ++round) {
        std::int64_t p = 0, q = 0;
        do {
            p = pick(rng, primes);
            q = pick(rng, primes);
        } while (p < 3 || p >= q);
        const auto ctx = ChiContext::make(p, q);
        for (int trial = 0; trial < 200; ++trial) {
            const std::int64_t n = rand_in(rng, -1000000, 1000000);
            const std::int64_t i = rand_in(rng, -1000000, 1000000);
            const auto w = chi_windows(ctx, n);
            const int direct = chi(ctx, n, i);
            const std::int64_t ibar = bar(i, ctx.pq);
            const int windowed = w.plus.contains(ibar) ? 1 : w.minus.contains(ibar) ? -1 : 0;
            if (direct != windowed) {
                std::ostringstream os;
                os << "p=" << p << " q=" << q << " n=" << n << " i=" << i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Outcome prop_window_cardinality(Rng&) {
    const std::pair<std::int64_t, std::int64_t> small[] = {{3, 5}, {5, 7}, {3, 11}};
    for (const auto& [p, q] : small) {
        const auto ctx = ChiContext::make(p, q);
        for (std::int64_t n = 0; n < ctx.pq; ++n) {
            const auto w = chi_windows(ctx, n);
            if (static_cast<std::int64_t>(w.plus.residues().size()) != p ||
                static_cast<std::int64_t>(w.minus.residues().size()) != p) {
                std::ostringstream os;
                os << "p=" << p << " q=" << q << " n=" << n << " window size != p";
                return os.str();
            }
            // Count through the case table too, so the closed form
            // cannot mask a miscounted region.
            std::int64_t plus = 0, minus = 0;
            for (std::int64_t i = 0; i < ctx.pq; ++i) {
                const int v = chi(ctx, n, i);
                plus += v == 1;
                minus += v == -1;
            }
            if (plus != p || minus != p) {
                std::ostringstream os;
                os << "p=" << p << " q=" << q << " n=" << n << " case table regions " << plus
                   << "/" << minus << " != p";
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Outcome prop_periodicity(Rng& rng) {
    const auto primes = primes_up_to(300);
    for (int round = 0; round < 200; ++round) {
        std::int64_t p = 0, q = 0;
        do {
            p = pick(rng, primes);
            q = pick(rng, primes);
        } while (p < 3 || p >= q);
        const auto ctx = ChiContext::make(p, q);
        const std::int64_t n = rand_in(rng, -100000, 100000);
        const std::int64_t i = rand_in(rng, -100000, 100000);
        const std::int64_t kn = rand_in(rng, -50, 50);
        const std::int64_t ki = rand_in(rng, -50, 50);
        if (chi(ctx, n, i) != chi(ctx, n + kn * ctx.pq, i + ki * ctx.pq)) {
            std::ostringstream os;
            os << "p=" << p << " q=" << q << " n=" << n << " i=" << i << " shift (" << kn << ","
               << ki << ")";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_inverse_shift_relation(Rng& rng) {
    // chi_{m r}(i) = -1 iff chi_{(m - r_p* q) r}(i) = +1: exhaustive over
    // residues at (3,5,7), randomized at seeded triples.
    const auto check = [](const TernaryTriple& t, std::int64_t m, std::int64_t i) {
        const auto ctx = ChiContext::make(t.p, t.q, t.r);
        const bool lhs = chi(ctx, m * t.r, i) == -1;
        const bool rhs = chi(ctx, (m - ctx.r_p_star * t.q) * t.r, i) == 1;
        return lhs == rhs;
    };
    {
        const auto t = TernaryTriple::make(3, 5, 7);
        for (std::int64_t m = 0; m < 15; ++m) {
            for (std::int64_t i = 0; i < 15; ++i) {
                if (!check(t, m, i)) {
                    std::ostringstream os;
                    os << "(3,5,7) m=" << m << " i=" << i;
                    return os.str();
                }
            }
        }
    }
    for (int round = 0; round < 30; ++round) {
        const auto t = random_triple(rng, 60, 150, 400);
        for (int trial = 0; trial < 60; ++trial) {
            const std::int64_t m = rand_in(rng, -100000, 100000);
            const std::int64_t i = rand_in(rng, -100000, 100000);
            if (!check(t, m, i)) {
                std::ostringstream os;
                os << triple_tag(t) << " m=" << m << " i=" << i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Outcome prop_sign_regions_disjoint(Rng&) {
    // chi() throws if both regions ever fire; drive it across full
    // residue squares so the check actually runs.
    const std::pair<std::int64_t, std::int64_t> small[] = {{3, 5}, {3, 7}, {5, 7}, {5, 11}};
    for (const auto& [p, q] : small) {
        const auto ctx = ChiContext::make(p, q);
        for (std::int64_t n = 0; n < ctx.pq; ++n) {
            for (std::int64_t i = 0; i < ctx.pq; ++i) {
                (void)chi(ctx, n, i);
            }
        }
    }
    return std::nullopt;
}

// -------------------------------------------------------------- ternary

Outcome prop_full_sum_vanishes(Rng& rng) {
    const std::int64_t exhaustive[][3] = {{3, 5, 7}, {3, 5, 11}, {5, 7, 11}};
    for (const auto& e : exhaustive) {
        const auto t = TernaryTriple::make(e[0], e[1], e[2]);
        const auto s = lam_leung_support(t.p, t.q);
        for (std::int64_t i = 0; i < t.p * t.q; ++i) {
            if (zero_sum_residual(t, s, i) != 0) {
                std::ostringstream os;
                os << triple_tag(t) << " i=" << i << " residual "
                   << zero_sum_residual(t, s, i);
                return os.str();
            }
        }
    }
    for (int round = 0; round < 10; ++round) {
        const auto t = random_triple(rng, 40, 100, 300);
        const auto s = lam_leung_support(t.p, t.q);
        for (int trial = 0; trial < 50; ++trial) {
            const std::int64_t i = rand_in(rng, -1000000, 1000000);
            if (zero_sum_residual(t, s, i) != 0) {
                std::ostringstream os;
                os << triple_tag(t) << " i=" << i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Outcome prop_windowed_equals_direct(Rng& rng) {
    const std::int64_t exhaustive[][3] = {{3, 5, 7}, {3, 5, 11}, {5, 7, 11}};
    for (const auto& e : exhaustive) {
        const auto t = TernaryTriple::make(e[0], e[1], e[2]);
        const auto s = lam_leung_support(t.p, t.q);
        const auto fast = ternary_all_coefficients(t, s);
        for (std::int64_t i = 0; i <= t.phi; ++i) {
            if (fast.at(i) != ternary_coefficient(t, s, i)) {
                std::ostringstream os;
                os << triple_tag(t) << " i=" << i << " windowed " << fast.at(i) << " direct "
                   << ternary_coefficient(t, s, i);
                return os.str();
            }
        }
    }
    for (int round = 0; round < 5; ++round) {
        const auto t = random_triple(rng, 20, 60, 200);
        const auto s = lam_leung_support(t.p, t.q);
        const auto fast = ternary_all_coefficients(t, s);
        for (int trial = 0; trial < 200; ++trial) {
            const std::int64_t i = rand_in(rng, -10, t.phi + 10);
            const std::int64_t direct = ternary_coefficient(t, s, i);
            const std::int64_t windowed = (i >= 0 && i <= t.phi) ? fast.at(i) : 0;
            if (windowed != direct) {
                std::ostringstream os;
                os << triple_tag(t) << " i=" << i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Outcome prop_matches_product_route(Rng& rng) {
    auto triples = odd_prime_triples_up_to(5000);
    for (int extra = 0; extra < 10; ++extra) {
        TernaryTriple t = random_triple(rng, 20, 50, 150);
        while (t.n() > 50000) t = random_triple(rng, 20, 50, 150);
        triples.push_back(t);
    }
    for (const auto& t : triples) {
        const auto s = lam_leung_support(t.p, t.q);
        if (!same_coefficients(ternary_all_coefficients(t, s), cyclotomic_oracle(t.n()))) {
            return triple_tag(t) + " windowed engine disagrees with product route";
        }
    }
    return std::nullopt;
}

Outcome prop_partial_sum_dominates(Rng& rng) {
    auto triples = odd_prime_triples_up_to(5000);
    for (int extra = 0; extra < 5; ++extra) {
        triples.push_back(random_triple(rng, 20, 60, 200));
    }
    for (const auto& t : triples) {
        const auto s = lam_leung_support(t.p, t.q);
        const auto report = height(t, s);
        const auto bound = max_partial_sum(t, s);
        if (bound < report.height) {
            std::ostringstream os;
            os << triple_tag(t) << " truncated-sum max " << bound << " < height "
               << report.height;
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_coefficient_symmetry(Rng& rng) {
    auto triples = odd_prime_triples_up_to(4000);
    for (int extra = 0; extra < 5; ++extra) {
        triples.push_back(random_triple(rng, 20, 60, 200));
    }
    for (const auto& t : triples) {
        const auto poly = ternary_all_coefficients(t, lam_leung_support(t.p, t.q));
        for (std::int64_t i = 0; i <= t.phi / 2; ++i) {
            if (poly.at(i) != poly.at(t.phi - i)) {
                std::ostringstream os;
                os << triple_tag(t) << " c_" << i << " != c_" << t.phi - i;
                return os.str();
            }
        }
    }
    return std::nullopt;
}

Outcome prop_class_partition(Rng& rng) {
    for (int round = 0; round < 60; ++round) {
        const auto t = random_triple(rng, 30, 80, 200);
        const auto s = lam_leung_support(t.p, t.q);
        const std::int64_t i = rand_in(rng, -100, t.phi + 100);
        const std::int64_t j = rand_in(rng, -10, s.degree() + 10);
        const auto partition = classify_classes(t, s, i, j);
        const auto total = partition.special.size() + partition.plain.size() +
                           partition.null_.size();
        if (static_cast<std::int64_t>(total) != t.p ||
            static_cast<std::int64_t>(partition.classes.size()) != t.p) {
            std::ostringstream os;
            os << triple_tag(t) << " i=" << i << " j=" << j << " partition covers " << total
               << " classes";
            return os.str();
        }
        // A cut below the whole support leaves nothing on the strict
        // side, so no class can be special.
        const auto below = classify_classes(t, s, i, -1);
        if (!below.special.empty()) {
            std::ostringstream os;
            os << triple_tag(t) << " i=" << i << " special classes with j below support";
            return os.str();
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------------- bounds

Outcome prop_parameter_ranges(Rng& rng) {
    for (int round = 0; round < 200; ++round) {
        const auto t = random_triple(rng, 100, 300, 1000);
        const auto params = bzdega_params(t);
        std::ostringstream os;
        if (params.alpha < 1 || params.alpha > (t.p - 1) / 2) {
            os << triple_tag(t) << " alpha=" << params.alpha;
            return os.str();
        }
        if (params.beta <= 0 || params.beta >= t.p) {
            os << triple_tag(t) << " beta=" << params.beta;
            return os.str();
        }
        if (params.beta_star < 1 || params.beta_star > (t.p - 1) / 2) {
            os << triple_tag(t) << " beta*=" << params.beta_star;
            return os.str();
        }
        const std::int64_t prod =
            bar(bar(params.alpha * params.beta, t.p) * bar(t.q * t.r, t.p), t.p);
        if (prod != 1) {
            os << triple_tag(t) << " alpha*beta*q*r = " << prod << " (mod p)";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_height_below_bounds(Rng& rng) {
    auto triples = odd_prime_triples_up_to(5000);
    for (int extra = 0; extra < 10; ++extra) {
        triples.push_back(random_triple(rng, 30, 80, 250));
    }
    for (const auto& t : triples) {
        const auto report = height(t, lam_leung_support(t.p, t.q));
        const auto bounds = bounds_report(t, report.height);
        std::ostringstream os;
        if (report.height > bounds.bang || report.height > bounds.beiter_classic ||
            report.height > bounds.bzdega || report.height > bounds.corrected_beiter) {
            os << triple_tag(t) << " height " << report.height << " above a proven bound (bang "
               << bounds.bang << ", classic " << bounds.beiter_classic << ", bzdega "
               << bounds.bzdega << ", 2p/3 " << bounds.corrected_beiter << ")";
            return os.str();
        }
        if (bounds.corrected_violated) {
            os << triple_tag(t) << " corrected cap flagged";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_small_p_half_bound(Rng& rng) {
    const auto primes = primes_up_to(400);
    for (int round = 0; round < 60; ++round) {
        const std::int64_t p = (round % 2 == 0) ? 3 : 5;
        std::int64_t q = 0, r = 0;
        do {
            q = pick(rng, primes);
            r = pick(rng, primes);
        } while (q <= p || r <= q);
        const auto t = TernaryTriple::make(p, q, r);
        const auto report = height(t, lam_leung_support(p, q));
        if (report.height > (p + 1) / 2) {
            std::ostringstream os;
            os << triple_tag(t) << " height " << report.height << " > (p+1)/2";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_residue_one_half_bound(Rng& rng) {
    // q or r congruent to +-1 mod p keeps the height at or below (p+1)/2.
    int found = 0;
    for (int round = 0; round < 400 && found < 60; ++round) {
        const auto t = random_triple(rng, 40, 200, 600);
        const bool applicable = bar(t.q, t.p) == 1 || bar(t.q, t.p) == t.p - 1 ||
                                bar(t.r, t.p) == 1 || bar(t.r, t.p) == t.p - 1;
        if (!applicable) continue;
        ++found;
        const auto report = height(t, lam_leung_support(t.p, t.q));
        if (report.height > (t.p + 1) / 2) {
            std::ostringstream os;
            os << triple_tag(t) << " height " << report.height << " > (p+1)/2 with q or r = +-1"
               << " (mod p)";
            return os.str();
        }
    }
    return std::nullopt;
}

Outcome prop_half_bound_witnesses(Rng&) {
    // For p in {3,5,7} some desk-scale triple reaches (p+1)/2. The r
    // range widens once before giving up.
    for (const std::int64_t p : {3, 5, 7}) {
        const std::int64_t target = (p + 1) / 2;
        bool found = false;
        std::int64_t best = 0;
        for (const std::int64_t r_max : {300, 1000}) {
            for (const std::int64_t q : primes_up_to(100)) {
                if (q <= p) continue;
                const auto s = lam_leung_support(p, q);
                for (const std::int64_t r : primes_up_to(r_max)) {
                    if (r <= q) continue;
                    const auto report = height(TernaryTriple::make(p, q, r), s);
                    best = std::max(best, report.height);
                    if (report.height >= target) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) {
            std::ostringstream os;
            os << "p=" << p << " no triple with height >= " << target << " found (best " << best
               << ")";
            return os.str();
        }
    }
    return std::nullopt;
}

// --------------------------------------------------------------- runner

struct Property {
    const char* name;
    Outcome (*check)(Rng&);
};

const Property kBinaryProps[] = {
    {"binary.support_counts", prop_support_counts},
    {"binary.inverse_identity", prop_inverse_identity},
    {"binary.sign_alternation", prop_sign_alternation},
    {"binary.dense_matches_product_route", prop_dense_matches_product_route},
};

const Property kChiProps[] = {
    {"chi.window_consistency", prop_window_consistency},
    {"chi.window_cardinality", prop_window_cardinality},
    {"chi.periodicity", prop_periodicity},
    {"chi.inverse_shift_relation", prop_inverse_shift_relation},
    {"chi.sign_regions_disjoint", prop_sign_regions_disjoint},
};

const Property kTernaryProps[] = {
    {"ternary.full_sum_vanishes", prop_full_sum_vanishes},
    {"ternary.windowed_equals_direct", prop_windowed_equals_direct},
    {"ternary.matches_product_route", prop_matches_product_route},
    {"ternary.partial_sum_dominates_height", prop_partial_sum_dominates},
    {"ternary.coefficient_symmetry", prop_coefficient_symmetry},
    {"ternary.class_partition_counts", prop_class_partition},
};

const Property kBoundsProps[] = {
    {"bounds.parameter_ranges", prop_parameter_ranges},
    {"bounds.height_below_each_bound", prop_height_below_bounds},
    {"bounds.small_p_half_bound", prop_small_p_half_bound},
    {"bounds.residue_one_half_bound", prop_residue_one_half_bound},
    {"bounds.half_bound_witnesses", prop_half_bound_witnesses},
};

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t hash = 1469598103934665603ull;
    for (const char c : text) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 1099511628211ull;
    }
    return hash;
}

template <std::size_t N>
SuiteReport run_suite(const char* suite, const Property (&props)[N], std::uint64_t seed) {
    SuiteReport report;
    report.suite = suite;
    for (const Property& prop : props) {
        PropertyResult result;
        result.name = prop.name;
        Rng rng(seed ^ fnv1a(prop.name));
        try {
            const Outcome outcome = prop.check(rng);
            result.passed = !outcome.has_value();
            if (outcome) result.detail = *outcome;
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        report.properties.push_back(std::move(result));
    }
    return report;
}

} // namespace

std::vector<SuiteReport> run(std::string_view suite, std::uint64_t seed) {
    std::vector<SuiteReport> reports;
    const bool all = suite == "all";
    if (all || suite == "binary") reports.push_back(run_suite("binary", kBinaryProps, seed));
    if (all || suite == "chi") reports.push_back(run_suite("chi", kChiProps, seed));
    if (all || suite == "ternary") reports.push_back(run_suite("ternary", kTernaryProps, seed));
    if (all || suite == "bounds") reports.push_back(run_suite("bounds", kBoundsProps, seed));
    if (reports.empty()) {
        throw std::invalid_argument("verify: unknown suite '" + std::string(suite) +
                                    "' (expected all|binary|chi|ternary|bounds)");
    }
    return reports;
}

void print_report(const std::vector<SuiteReport>& reports, std::ostream& out) {
    std::size_t passed = 0, total = 0;
    for (const auto& suite : reports) {
        for (const auto& prop : suite.properties) {
            ++total;
            if (prop.passed) {
                ++passed;
                out << "PASS " << prop.name << '\n';
            } else {
                out << "FAIL " << prop.name << ": " << prop.detail << '\n';
            }
        }
    }
    out << "verify: " << passed << "/" << total << " properties passed\n";
}

bool all_passed(const std::vector<SuiteReport>& reports) {
    for (const auto& suite : reports) {
        if (!suite.all_passed()) return false;
    }
    return true;
}

} // namespace cyclo::verify
