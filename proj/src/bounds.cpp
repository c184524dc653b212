#include "cyclo/bounds.hpp"

#include <algorithm>

#include "cyclo/residue.hpp"

namespace cyclo {

BzdegaParams bzdega_params(const TernaryTriple& t) {
    BzdegaParams params;
    params.alpha = std::min({t.q_p_star, t.r_p_star, t.p - t.q_p_star, t.p - t.r_p_star});
    // alpha*beta*q*r == 1 (mod p): beta is the inverse of alpha*q*r.
    const std::int64_t aqr = bar(bar(params.alpha * t.q, t.p) * bar(t.r, t.p), t.p);
    params.beta = mod_inverse_in_range(aqr, t.p);
    params.beta_star = std::min(params.beta, t.p - params.beta);
    return params;
}

std::int64_t bzdega_bound(const TernaryTriple& t) {
    const BzdegaParams params = bzdega_params(t);
    return std::min(2 * params.alpha + params.beta_star, t.p - params.beta_star);
}

BoundsReport bounds_report(const TernaryTriple& t, std::int64_t height) {
    BoundsReport report;
    report.bang = t.p - 1;
    report.beiter_classic = t.p - t.p / 4;
    report.beiter_conjecture = (t.p + 1) / 2;
    report.corrected_beiter = 2 * t.p / 3;
    report.bzdega = bzdega_bound(t);
    report.height = height;
    report.beiter_violated = height > report.beiter_conjecture;
    report.corrected_violated = height > report.corrected_beiter;
    return report;
}

} // namespace cyclo
