// Command-line front end: exact coefficient dumps, height queries with
// automatic kernel reduction, restricted-M(p) sweeps with resume, the
// property suites, and the class-partition diagnostic.
//
// Exit codes: 0 success, 1 property/bound violation (or internal
// defect), 2 usage error, 3 resource limit.

#include <chrono>
#include <cstdint>
#include <exception>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclo/bounds.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/oracle.hpp"
#include "cyclo/poly.hpp"
#include "cyclo/residue.hpp"
#include "cyclo/scan.hpp"
#include "cyclo/ternary.hpp"
#include "cyclo/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResourceLimit = 3;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

bool kernel_is_ternary(std::int64_t kernel) {
    const auto factors = cyclo::factorize(kernel);
    return factors.size() == 3 && factors.front().first >= 3;
}

cyclo::DensePoly compute_coefficients(std::int64_t n) {
    const auto plan = cyclo::reduce_to_kernel(n);
    if (kernel_is_ternary(plan.kernel_n)) {
        const auto factors = cyclo::factorize(plan.kernel_n);
        const auto triple =
            cyclo::TernaryTriple::make(factors[0].first, factors[1].first, factors[2].first);
        const auto support = cyclo::lam_leung_support(triple.p, triple.q);
        const auto kernel_poly = cyclo::widen(cyclo::ternary_all_coefficients(triple, support));
        return cyclo::reconstruct_from_kernel(plan, kernel_poly);
    }
    return cyclo::cyclotomic_oracle(n);
}

int cmd_coeffs(std::int64_t n, const std::string& format) {
    if (n < 1) throw UsageError("coeffs: n must be >= 1");
    const cyclo::DensePoly poly = compute_coefficients(n);

    std::ostringstream out;
    if (format == "json") {
        out << "{\"n\":" << n << ",\"degree\":" << poly.degree() << ",\"coefficients\":[";
        for (std::int64_t i = 0; i <= poly.degree(); ++i) {
            if (i > 0) out << ',';
            out << poly.at(i);
        }
        out << "]}";
    } else { // text and csv: the bare ascending coefficient list
        for (std::int64_t i = 0; i <= poly.degree(); ++i) {
            if (i > 0) out << ',';
            out << poly.at(i);
        }
    }
    std::cout << out.str() << '\n';
    return kExitOk;
}

int cmd_height(std::int64_t n, const std::string& method) {
    if (n < 1) throw UsageError("height: n must be >= 1");
    const auto plan = cyclo::reduce_to_kernel(n);
    const bool ternary = kernel_is_ternary(plan.kernel_n);

    std::string used;
    std::int64_t a = 0;
    if (method == "lemma" || (method == "auto" && ternary)) {
        if (!ternary) {
            throw UsageError("height: --method lemma needs a kernel with exactly three odd "
                             "prime factors, got kernel " + std::to_string(plan.kernel_n));
        }
        const auto factors = cyclo::factorize(plan.kernel_n);
        const auto triple =
            cyclo::TernaryTriple::make(factors[0].first, factors[1].first, factors[2].first);
        const auto report = cyclo::height(triple, cyclo::lam_leung_support(triple.p, triple.q));
        a = report.height;
        used = "lemma";
    } else {
        a = cyclo::height_oracle(plan.kernel_n);
        used = "oracle";
    }
    std::cout << "A(" << n << ") = " << a << '\n'
              << "kernel = " << plan.kernel_n << '\n'
              << "method = " << used << '\n';
    return kExitOk;
}

int cmd_scan(const cyclo::ScanOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const cyclo::ScanSummary summary = cyclo::run_scan(options);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    std::cerr << "scan wall time: " << elapsed << " ms (" << summary.newly_computed
              << " newly computed)\n";

    std::cout << "scan p=" << summary.p << " q_max=" << summary.q_max
              << " r_max=" << summary.r_max << '\n'
              << "triples_scanned = " << summary.triples_scanned << '\n'
              << "restricted_M = " << summary.restricted_M << '\n';
    if (summary.triples_scanned > 0) {
        std::cout << "argmax = (" << summary.argmax_q << "," << summary.argmax_r << ")\n";
    } else {
        std::cout << "argmax = none\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t seed) {
    const auto reports = cyclo::verify::run(suite, seed);
    cyclo::verify::print_report(reports, std::cout);
    return cyclo::verify::all_passed(reports) ? kExitOk : kExitViolation;
}

int cmd_diag_classes(std::int64_t p, std::int64_t q, std::int64_t r, std::int64_t i,
                     std::int64_t j) {
    const auto triple = cyclo::TernaryTriple::make(p, q, r);
    const auto support = cyclo::lam_leung_support(p, q);
    const auto partition = cyclo::classify_classes(triple, support, i, j);

    const auto kind_name = [](cyclo::ClassKind kind) {
        switch (kind) {
        case cyclo::ClassKind::Special: return "special";
        case cyclo::ClassKind::Plain: return "plain";
        default: return "null";
        }
    };
    const auto print_set = [](const char* name, const std::vector<std::int64_t>& labels) {
        std::cout << name << " = {";
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (k > 0) std::cout << ',';
            std::cout << labels[k];
        }
        std::cout << "}\n";
    };

    std::cout << "classes p=" << p << " q=" << q << " r=" << r << " i=" << i << " j=" << j
              << '\n';
    for (const auto& info : partition.classes) {
        std::cout << (info.mirrored ? "v'=" : "v=") << info.label << " " << kind_name(info.kind);
        if (info.ge_witness) {
            std::cout << " ge_witness(u=" << info.ge_witness->u
                      << ", m=" << info.ge_witness->exponent << ")";
        }
        if (info.lt_witness) {
            std::cout << " lt_witness(u=" << info.lt_witness->u
                      << ", m=" << info.lt_witness->exponent << ")";
        }
        std::cout << '\n';
    }
    print_set("S", partition.special);
    print_set("P", partition.plain);
    print_set("N", partition.null_);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cyclotomic coefficient engine and verification harness"};
    app.require_subcommand(1);

    std::int64_t coeffs_n = 0;
    std::string coeffs_format = "text";
    auto* coeffs = app.add_subcommand("coeffs", "print the coefficients of Phi_n");
    coeffs->add_option("n", coeffs_n, "index of the cyclotomic polynomial")->required();
    coeffs->add_option("--format", coeffs_format, "output format")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    std::int64_t height_n = 0;
    std::string height_method = "auto";
    auto* height_cmd = app.add_subcommand("height", "print A(n) after kernel reduction");
    height_cmd->add_option("n", height_n, "index of the cyclotomic polynomial")->required();
    height_cmd->add_option("--method", height_method, "computation route")
        ->check(CLI::IsMember({"auto", "lemma", "oracle"}));

    cyclo::ScanOptions scan_options;
    auto* scan = app.add_subcommand("scan", "sweep the (q, r) grid for a fixed p");
    scan->add_option("--p", scan_options.p, "fixed odd prime")->required();
    scan->add_option("--q-max", scan_options.q_max, "largest q")->required();
    scan->add_option("--r-max", scan_options.r_max, "largest r")->required();
    scan->add_option("--jobs", scan_options.jobs, "worker threads");
    scan->add_option("--out", scan_options.out_path, "record file (one JSON object per line)");
    scan->add_flag("--resume", scan_options.resume, "skip triples already in the record file");

    std::string verify_suite = "all";
    std::uint64_t verify_seed = 1;
    auto* verify = app.add_subcommand("verify", "run the property suites");
    verify->add_option("--suite", verify_suite, "which suite")
        ->check(CLI::IsMember({"all", "binary", "chi", "ternary", "bounds"}));
    verify->add_option("--seed", verify_seed, "seed for the randomized checks");

    std::int64_t diag_p = 0, diag_q = 0, diag_r = 0, diag_i = 0, diag_j = 0;
    auto* diag = app.add_subcommand("diag-classes", "special/plain/null class partition");
    diag->add_option("--p", diag_p)->required();
    diag->add_option("--q", diag_q)->required();
    diag->add_option("--r", diag_r)->required();
    diag->add_option("--i", diag_i)->required();
    diag->add_option("--j", diag_j)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (coeffs->parsed()) return cmd_coeffs(coeffs_n, coeffs_format);
        if (height_cmd->parsed()) return cmd_height(height_n, height_method);
        if (scan->parsed()) return cmd_scan(scan_options);
        if (verify->parsed()) return cmd_verify(verify_suite, verify_seed);
        if (diag->parsed()) return cmd_diag_classes(diag_p, diag_q, diag_r, diag_i, diag_j);
        std::cerr << "no subcommand\n";
        return kExitUsage;
    } catch (const cyclo::ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitResourceLimit;
    } catch (const cyclo::BoundViolationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const cyclo::InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitViolation;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitViolation;
    }
}
