// Acceptance suite: one pass/fail line per criterion, nonzero exit if
// any fails. Criteria with a stated runtime budget enforce it.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cyclo/binary_support.hpp"
#include "cyclo/bounds.hpp"
#include "cyclo/chi.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/residue.hpp"
#include "cyclo/scan.hpp"
#include "cyclo/ternary.hpp"

using namespace cyclo;

namespace {

struct CriterionResult {
    bool passed = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

std::int64_t ms_since(Clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<TernaryTriple> triples_up_to(std::int64_t bound) {
    std::vector<TernaryTriple> triples;
    const auto primes = primes_up_to(bound / 15);
    for (std::size_t a = 0; a < primes.size(); ++a) {
        const std::int64_t p = primes[a];
        if (p < 3) continue;
        if (p * p * p > bound) break;
        for (std::size_t b = a + 1; b < primes.size(); ++b) {
            const std::int64_t q = primes[b];
            if (p * q * q > bound) break;
            for (std::size_t c = b + 1; c < primes.size(); ++c) {
                const std::int64_t r = primes[c];
                if (p * q * r > bound) break;
                triples.push_back(TernaryTriple::make(p, q, r));
            }
        }
    }
    return triples;
}

struct GridResult {
    std::vector<ScanRecord> records;
    std::int64_t max_height = 0;
};

// Engine-only sweep of p-fixed grid, q <= q_max, r <= r_max.
GridResult sweep_grid(std::int64_t p, std::int64_t q_max, std::int64_t r_max) {
    GridResult result;
    const auto primes = primes_up_to(r_max);
    for (const std::int64_t q : primes) {
        if (q <= p || q > q_max) continue;
        const auto support = lam_leung_support(p, q);
        for (const std::int64_t r : primes) {
            if (r <= q) continue;
            const auto triple = TernaryTriple::make(p, q, r);
            const auto report = height(triple, support);
            const auto bounds = bounds_report(triple, report.height);
            ScanRecord rec;
            rec.p = p;
            rec.q = q;
            rec.r = r;
            rec.height = report.height;
            rec.witness_exponent = report.witness_exponent;
            rec.bzdega = bounds.bzdega;
            rec.corrected_cap = bounds.corrected_beiter;
            rec.beiter_violated = bounds.beiter_violated;
            result.records.push_back(rec);
            result.max_height = std::max(result.max_height, report.height);
        }
    }
    return result;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// State shared between criteria.
std::vector<TernaryTriple> g_triples_100k;        // pqr <= 100,000
std::vector<std::int64_t> g_heights_100k;         // heights for g_triples_100k
std::map<std::int64_t, GridResult> g_grids;       // p -> q<=100, r<=300 sweep
std::int64_t g_beiter_violations = 0;             // across all sweeps

CriterionResult criterion_1() {
    const auto start = Clock::now();
    CriterionResult res;

    std::int64_t checked = 0;
    for (std::int64_t n = 1; n < 105; n += 2) {
        if (mobius(n) == 0) continue; // not squarefree
        // Below 105 a squarefree odd number has at most two odd prime
        // factors, so the three-factor engine never applies; the product
        // route is the required observable.
        if (height_oracle(n) != 1) {
            res.passed = false;
            res.detail = "A(" + std::to_string(n) + ") != 1";
            return res;
        }
        ++checked;
    }
    const auto triple = TernaryTriple::make(3, 5, 7);
    const auto engine_height = height(triple, lam_leung_support(3, 5)).height;
    const auto oracle_height = height_oracle(105);
    if (engine_height != 2 || oracle_height != 2) {
        res.passed = false;
        res.detail = "A(105): engine " + std::to_string(engine_height) + ", product route " +
                     std::to_string(oracle_height) + ", expected 2";
        return res;
    }

    const auto elapsed = ms_since(start);
    if (elapsed >= 1000) {
        res.passed = false;
        res.detail = "took " + std::to_string(elapsed) + " ms (budget 1000 ms)";
        return res;
    }
    res.detail = std::to_string(checked) + " squarefree odd n < 105 all at height 1, A(105)=2 " +
                 "via both routes, " + std::to_string(elapsed) + " ms";
    return res;
}

CriterionResult criterion_2() {
    const auto start = Clock::now();
    CriterionResult res;

    g_triples_100k = triples_up_to(100000);
    g_heights_100k.reserve(g_triples_100k.size());
    for (const auto& t : g_triples_100k) {
        const auto s = lam_leung_support(t.p, t.q);
        const auto engine = ternary_all_coefficients(t, s);
        const auto reference = cyclotomic_oracle(t.n());
        if (!same_coefficients(engine, reference)) {
            res.passed = false;
            res.detail = "coefficient mismatch at (" + std::to_string(t.p) + "," +
                         std::to_string(t.q) + "," + std::to_string(t.r) + ")";
            return res;
        }
        g_heights_100k.push_back(engine.max_abs());
    }

    const auto elapsed = ms_since(start);
    if (elapsed >= 120000) {
        res.passed = false;
        res.detail = "took " + std::to_string(elapsed) + " ms (budget 120000 ms)";
        return res;
    }
    res.detail = std::to_string(g_triples_100k.size()) +
                 " triples with pqr <= 100000 match the product route exactly, " +
                 std::to_string(elapsed) + " ms single-threaded";
    return res;
}

CriterionResult criterion_3() {
    CriterionResult res;
    std::int64_t worst = 0;
    for (std::size_t k = 0; k < g_triples_100k.size(); ++k) {
        const auto& t = g_triples_100k[k];
        const std::int64_t cap = 2 * t.p / 3;
        if (g_heights_100k[k] > cap) {
            res.passed = false;
            res.detail = "height " + std::to_string(g_heights_100k[k]) + " > cap " +
                         std::to_string(cap) + " at (" + std::to_string(t.p) + "," +
                         std::to_string(t.q) + "," + std::to_string(t.r) + ")";
            return res;
        }
        worst = std::max(worst, g_heights_100k[k]);
    }
    std::int64_t grid_triples = 0;
    for (const std::int64_t p : {7, 11, 13}) {
        g_grids[p] = sweep_grid(p, 100, 300);
        for (const auto& rec : g_grids[p].records) {
            ++grid_triples;
            if (rec.beiter_violated) ++g_beiter_violations;
            if (rec.height > rec.corrected_cap) {
                res.passed = false;
                res.detail = "height " + std::to_string(rec.height) + " > cap " +
                             std::to_string(rec.corrected_cap) + " at (" + std::to_string(p) +
                             "," + std::to_string(rec.q) + "," + std::to_string(rec.r) + ")";
                return res;
            }
        }
    }
    res.detail = "0 violations of height <= floor(2p/3) over " +
                 std::to_string(g_triples_100k.size()) + " + " + std::to_string(grid_triples) +
                 " triples";
    return res;
}

CriterionResult criterion_4() {
    CriterionResult res;
    std::int64_t checked = 0;
    for (std::size_t k = 0; k < g_triples_100k.size(); ++k) {
        const auto bound = bzdega_bound(g_triples_100k[k]);
        if (g_heights_100k[k] > bound) {
            const auto& t = g_triples_100k[k];
            res.passed = false;
            res.detail = "height " + std::to_string(g_heights_100k[k]) + " > min{2a+b*, p-b*} = " +
                         std::to_string(bound) + " at (" + std::to_string(t.p) + "," +
                         std::to_string(t.q) + "," + std::to_string(t.r) + ")";
            return res;
        }
        ++checked;
    }
    for (const auto& [p, grid] : g_grids) {
        for (const auto& rec : grid.records) {
            if (rec.height > rec.bzdega) {
                res.passed = false;
                res.detail = "height " + std::to_string(rec.height) + " > " +
                             std::to_string(rec.bzdega) + " at (" + std::to_string(p) + "," +
                             std::to_string(rec.q) + "," + std::to_string(rec.r) + ")";
                return res;
            }
            ++checked;
        }
    }
    res.detail = "height <= min{2a+b*, p-b*} on all " + std::to_string(checked) + " triples";
    return res;
}

CriterionResult criterion_5() {
    CriterionResult res;
    for (const std::int64_t p : {3, 5}) {
        g_grids[p] = sweep_grid(p, 100, 300);
        for (const auto& rec : g_grids[p].records) {
            if (rec.beiter_violated) ++g_beiter_violations;
            if (rec.height > (p + 1) / 2) {
                res.passed = false;
                res.detail = "height " + std::to_string(rec.height) + " > (p+1)/2 at (" +
                             std::to_string(p) + "," + std::to_string(rec.q) + "," +
                             std::to_string(rec.r) + ")";
                return res;
            }
        }
    }
    res.detail = "p in {3,5}: all grid heights at or below (p+1)/2 (" +
                 std::to_string(g_grids[3].records.size() + g_grids[5].records.size()) +
                 " triples)";
    return res;
}

CriterionResult criterion_6() {
    CriterionResult res;
    // p = 3: the landmark triple itself.
    bool landmark = false;
    for (const auto& rec : g_grids[3].records) {
        if (rec.q == 5 && rec.r == 7) landmark = rec.height == 2;
    }
    if (!landmark) {
        res.passed = false;
        res.detail = "(3,5,7) does not reach height 2 = (3+1)/2 in the p=3 grid";
        return res;
    }
    // p in {5,7}: some triple at or above (p+1)/2, widening r once.
    std::ostringstream found;
    found << "witnesses: (3,5,7)@2";
    for (const std::int64_t p : {5, 7}) {
        const std::int64_t target = (p + 1) / 2;
        const ScanRecord* witness = nullptr;
        for (const auto& rec : g_grids[p].records) {
            if (rec.height >= target) {
                witness = &rec;
                break;
            }
        }
        GridResult widened;
        if (witness == nullptr) {
            widened = sweep_grid(p, 100, 1000);
            for (const auto& rec : widened.records) {
                if (rec.height >= target) {
                    witness = &rec;
                    break;
                }
            }
        }
        if (witness == nullptr) {
            res.passed = false;
            res.detail = "p=" + std::to_string(p) + ": no triple with height >= " +
                         std::to_string(target) + " up to q<=100, r<=1000";
            return res;
        }
        found << ", (" << p << "," << witness->q << "," << witness->r << ")@" << witness->height;
    }
    res.detail = found.str();
    return res;
}

CriterionResult criterion_7() {
    const auto start = Clock::now();
    CriterionResult res;

    // (a) untruncated kernel sums vanish on every residue for 20 seeded
    // triples.
    std::mt19937_64 rng(20250810);
    const auto primes = primes_up_to(200);
    for (int round = 0; round < 20; ++round) {
        std::int64_t p = 0, q = 0, r = 0;
        do {
            p = primes[rng() % primes.size()];
            q = primes[rng() % primes.size()];
            r = primes[rng() % primes.size()];
        } while (p < 3 || p >= q || q >= r || p * q > 2000);
        const auto t = TernaryTriple::make(p, q, r);
        const auto s = lam_leung_support(p, q);
        for (std::int64_t i = 0; i < p * q; ++i) {
            if (zero_sum_residual(t, s, i) != 0) {
                res.passed = false;
                res.detail = "nonzero untruncated sum at (" + std::to_string(p) + "," +
                             std::to_string(q) + "," + std::to_string(r) + ") i=" +
                             std::to_string(i);
                return res;
            }
        }
    }

    // (b) the minus-to-plus shift, exhaustive over residues at (3,5,7).
    {
        const auto ctx = ChiContext::make(3, 5, 7);
        for (std::int64_t m = 0; m < 15; ++m) {
            for (std::int64_t i = 0; i < 15; ++i) {
                const bool lhs = chi(ctx, m * 7, i) == -1;
                const bool rhs = chi(ctx, (m - ctx.r_p_star * 5) * 7, i) == 1;
                if (lhs != rhs) {
                    res.passed = false;
                    res.detail = "shift relation fails at m=" + std::to_string(m) +
                                 " i=" + std::to_string(i);
                    return res;
                }
            }
        }
    }

    // (c,e) alternation, count identity and product-route equality for
    // all odd prime pairs with pq <= 10,000.
    std::int64_t pairs = 0;
    const auto pair_primes = primes_up_to(3400);
    for (std::size_t a = 0; a < pair_primes.size(); ++a) {
        if (pair_primes[a] < 3) continue;
        for (std::size_t b = a + 1; b < pair_primes.size(); ++b) {
            const std::int64_t p = pair_primes[a], q = pair_primes[b];
            if (p * q > 10000) break;
            ++pairs;
            const auto s = lam_leung_support(p, q);
            if (static_cast<std::int64_t>(s.plus_support.size()) -
                    static_cast<std::int64_t>(s.minus_support.size()) !=
                1) {
                res.passed = false;
                res.detail = "support count difference != 1 at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")";
                return res;
            }
            int last = -1;
            for (const auto& term : s.terms) {
                if (term.sign != -last) {
                    res.passed = false;
                    res.detail = "signs do not alternate at (" + std::to_string(p) + "," +
                                 std::to_string(q) + ") exponent " +
                                 std::to_string(term.exponent);
                    return res;
                }
                last = term.sign;
            }
            if (last != 1) {
                res.passed = false;
                res.detail = "leading sign not +1 at (" + std::to_string(p) + "," +
                             std::to_string(q) + ")";
                return res;
            }
            if (!same_coefficients(binary_dense(s), cyclotomic_oracle(p * q))) {
                res.passed = false;
                res.detail = "dense expansion disagrees with the product route at (" +
                             std::to_string(p) + "," + std::to_string(q) + ")";
                return res;
            }
        }
    }

    // (d) both functional equations for n <= 200.
    for (std::int64_t n = 1; n <= 200; ++n) {
        for (const auto& [prime, mult] : factorize(n)) {
            const auto big = cyclotomic_oracle(prime * n);
            const auto base = cyclotomic_oracle(n);
            for (std::int64_t i = 0; i <= big.degree(); ++i) {
                const std::int64_t expected = (i % prime == 0) ? base.at(i / prime) : 0;
                if (big.at(i) != expected) {
                    res.passed = false;
                    res.detail = "Phi_{pn}(x) != Phi_n(x^p) at n=" + std::to_string(n) +
                                 " p=" + std::to_string(prime);
                    return res;
                }
            }
        }
        if (n % 2 == 1 && n > 1) {
            const auto doubled = cyclotomic_oracle(2 * n);
            const auto base = cyclotomic_oracle(n);
            for (std::int64_t i = 0; i <= base.degree(); ++i) {
                const std::int64_t expected = (i % 2 == 0) ? base.at(i) : -base.at(i);
                if (doubled.at(i) != expected) {
                    res.passed = false;
                    res.detail = "Phi_{2n}(x) != Phi_n(-x) at n=" + std::to_string(n);
                    return res;
                }
            }
        }
    }

    const auto elapsed = ms_since(start);
    if (elapsed >= 60000) {
        res.passed = false;
        res.detail = "took " + std::to_string(elapsed) + " ms (budget 60000 ms)";
        return res;
    }
    res.detail = "20 seeded triples, shift relation, alternation over " + std::to_string(pairs) +
                 " pairs, functional equations to n=200, " + std::to_string(elapsed) + " ms";
    return res;
}

CriterionResult criterion_8() {
    CriterionResult res;
    std::int64_t checked = 0;
    for (std::size_t k = 0; k < g_triples_100k.size(); ++k) {
        const auto& t = g_triples_100k[k];
        if (t.n() > 30000) continue;
        const auto s = lam_leung_support(t.p, t.q);
        const auto bound = max_partial_sum(t, s);
        if (bound < g_heights_100k[k]) {
            res.passed = false;
            res.detail = "truncated-sum max " + std::to_string(bound) + " < height " +
                         std::to_string(g_heights_100k[k]) + " at (" + std::to_string(t.p) + "," +
                         std::to_string(t.q) + "," + std::to_string(t.r) + ")";
            return res;
        }
        ++checked;
    }
    res.detail = "max truncated sum dominates the height on all " + std::to_string(checked) +
                 " triples with pqr <= 30000";
    return res;
}

CriterionResult criterion_9() {
    CriterionResult res;
    // Conjecture-1 counterexamples for p >= 11 and the asymptotic band
    // need r far beyond these grids; nothing is required here, but any
    // violations the sweeps did find get reported.
    res.detail = "excluded at desk scale by design; sweeps flagged " +
                 std::to_string(g_beiter_violations) +
                 " height > (p+1)/2 events (none required)";
    return res;
}

CriterionResult criterion_10() {
    CriterionResult res;
    const auto dir = std::filesystem::temp_directory_path() /
                     ("cyclo_acceptance_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);

    for (const std::int64_t p : {7, 11, 13}) {
        const std::string out1 = (dir / ("p" + std::to_string(p) + "_jobs1.jsonl")).string();
        const std::string out8 = (dir / ("p" + std::to_string(p) + "_jobs8.jsonl")).string();

        ScanOptions options;
        options.p = p;
        options.q_max = 100;
        options.r_max = 300;
        options.jobs = 1;
        options.out_path = out1;
        run_scan(options);
        options.jobs = 8;
        options.out_path = out8;
        run_scan(options);

        const std::string bytes1 = read_file(out1);
        if (bytes1 != read_file(out8) || bytes1.empty()) {
            res.passed = false;
            res.detail = "p=" + std::to_string(p) + ": --jobs 1 and --jobs 8 files differ";
            std::filesystem::remove_all(dir);
            return res;
        }

        // Interrupted state: half the records, out of order, plus a torn
        // line; resume must restore the reference bytes.
        std::vector<std::string> lines;
        std::istringstream stream(bytes1);
        std::string line;
        while (std::getline(stream, line)) lines.push_back(line);
        const std::string partial = (dir / ("p" + std::to_string(p) + "_partial.jsonl")).string();
        {
            std::ofstream out(partial, std::ios::binary);
            for (std::size_t k = lines.size() / 2; k-- > 0;) out << lines[2 * k] << '\n';
            out << lines[1].substr(0, lines[1].size() / 3);
        }
        options.jobs = 3;
        options.out_path = partial;
        options.resume = true;
        run_scan(options);
        options.resume = false;
        if (read_file(partial) != bytes1) {
            res.passed = false;
            res.detail = "p=" + std::to_string(p) + ": resume after interruption diverges";
            std::filesystem::remove_all(dir);
            return res;
        }
    }
    std::filesystem::remove_all(dir);
    res.detail = "p in {7,11,13}: --jobs 1 vs 8 byte-identical, interrupted+resumed matches";
    return res;
}

} // namespace

int main() {
    struct Criterion {
        int number;
        CriterionResult (*run)();
    };
    const Criterion criteria[] = {
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3}, {4, criterion_4},
        {5, criterion_5}, {6, criterion_6}, {7, criterion_7}, {8, criterion_8},
        {9, criterion_9}, {10, criterion_10},
    };

    int failures = 0;
    for (const auto& criterion : criteria) {
        CriterionResult result;
        try {
            result = criterion.run();
        } catch (const std::exception& e) {
            result.passed = false;
            result.detail = std::string("exception: ") + e.what();
        }
        if (!result.passed) ++failures;
        std::cout << (result.passed ? "PASS" : "FAIL") << " criterion-" << criterion.number
                  << ": " << result.detail << '\n';
    }
    if (failures == 0) {
        std::cout << "ACCEPTANCE: 10/10 criteria passed\n";
        return 0;
    }
    std::cout << "ACCEPTANCE: " << (10 - failures) << "/10 criteria passed\n";
    return 1;
}
