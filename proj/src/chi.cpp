#include "cyclo/chi.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/residue.hpp"

namespace cyclo {

ChiContext ChiContext::make(std::int64_t p, std::int64_t q) {
    if (p < 3 || q <= p || !is_prime(p) || !is_prime(q)) {
        throw std::invalid_argument("ChiContext: need odd primes p < q");
    }
    return ChiContext{p, q, p * q, 0};
}

ChiContext ChiContext::make(std::int64_t p, std::int64_t q, std::int64_t r) {
    ChiContext ctx = make(p, q);
    if (r <= q || !is_prime(r)) {
        throw std::invalid_argument("ChiContext: need an odd prime r > q");
    }
    ctx.r_p_star = mod_inverse_in_range(r, p);
    return ctx;
}

std::vector<std::int64_t> CyclicWindow::residues() const {
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(length));
    for (std::int64_t k = 0; k < length; ++k) {
        out.push_back((start + k) % modulus);
    }
    std::sort(out.begin(), out.end());
    return out;
}

int chi(const ChiContext& ctx, std::int64_t n, std::int64_t i) {
    const std::int64_t pq = ctx.pq;
    const std::int64_t b = bar(i + 1, pq);

    // Plus region: bar(i+1) inside the cyclic interval (bar(n+q), bar(n+p+q)].
    const std::int64_t hi_p = bar(n + ctx.p + ctx.q, pq);
    const std::int64_t lo_p = bar(n + ctx.q, pq);
    const bool plus = (hi_p >= b && b > lo_p) || (b <= hi_p && hi_p < lo_p) ||
                      (hi_p < lo_p && lo_p < b);

    // Minus region: bar(i+1) inside the cyclic interval (bar(n), bar(n)+p].
    const std::int64_t hi_m = bar(n + ctx.p, pq);
    const std::int64_t lo_m = bar(n, pq);
    const bool minus = (hi_m >= b && b > lo_m) || (b <= hi_m && hi_m < lo_m) ||
                       (hi_m < lo_m && lo_m < b);

    // The case table is presented as disjoint but no argument is given;
    // keep it a checked invariant instead of an assumption.
    if (plus && minus) {
        throw InternalError("chi: both sign regions fired at n=" + std::to_string(n) +
                            " i=" + std::to_string(i) + " (p=" + std::to_string(ctx.p) +
                            ", q=" + std::to_string(ctx.q) + ")");
    }
    if (plus) return 1;
    if (minus) return -1;
    return 0;
}

ChiWindows chi_windows(const ChiContext& ctx, std::int64_t n) {
    // bar(i+1) in (c, c+p] is the same as bar(i) in [c, c+p-1].
    ChiWindows w;
    w.plus = CyclicWindow{bar(n + ctx.q, ctx.pq), ctx.p, ctx.pq};
    w.minus = CyclicWindow{bar(n, ctx.pq), ctx.p, ctx.pq};
    return w;
}

} // namespace cyclo
