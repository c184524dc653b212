#include "cyclo/scan.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cyclo/bounds.hpp"
#include "cyclo/config.hpp"
#include "cyclo/errors.hpp"
#include "cyclo/residue.hpp"
#include "cyclo/ternary.hpp"

namespace cyclo {

std::string serialize_scan_record(const ScanRecord& r) {
    char buf[320];
    std::snprintf(buf, sizeof(buf),
                  "{\"schema_version\":%d,\"p\":%lld,\"q\":%lld,\"r\":%lld,\"height\":%lld,"
                  "\"witness_exponent\":%lld,\"bzdega\":%lld,\"corrected_cap\":%lld,"
                  "\"beiter_violated\":%s,\"engine_ms\":%lld}",
                  r.schema_version, static_cast<long long>(r.p), static_cast<long long>(r.q),
                  static_cast<long long>(r.r), static_cast<long long>(r.height),
                  static_cast<long long>(r.witness_exponent), static_cast<long long>(r.bzdega),
                  static_cast<long long>(r.corrected_cap), r.beiter_violated ? "true" : "false",
                  static_cast<long long>(r.engine_ms));
    return std::string(buf);
}

std::optional<ScanRecord> parse_scan_record(std::string_view line) {
    const nlohmann::json j = nlohmann::json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.is_object()) return std::nullopt;

    const auto get_int = [&j](const char* key, std::int64_t& out) {
        const auto it = j.find(key);
        if (it == j.end() || !it->is_number_integer()) return false;
        out = it->get<std::int64_t>();
        return true;
    };
    ScanRecord r;
    std::int64_t schema = 0;
    if (!get_int("schema_version", schema) || schema != 1) return std::nullopt;
    r.schema_version = 1;
    const auto flag = j.find("beiter_violated");
    if (flag == j.end() || !flag->is_boolean()) return std::nullopt;
    r.beiter_violated = flag->get<bool>();
    if (!get_int("p", r.p) || !get_int("q", r.q) || !get_int("r", r.r) ||
        !get_int("height", r.height) || !get_int("witness_exponent", r.witness_exponent) ||
        !get_int("bzdega", r.bzdega) || !get_int("corrected_cap", r.corrected_cap) ||
        !get_int("engine_ms", r.engine_ms)) {
        return std::nullopt;
    }
    return r;
}

namespace {

struct GridKey {
    std::int64_t q;
    std::int64_t r;
    auto operator<=>(const GridKey&) const = default;
};

ScanRecord compute_record(std::int64_t p, const SparseBinarySupport& support, std::int64_t q,
                          std::int64_t r, std::int64_t max_degree) {
    const TernaryTriple triple = TernaryTriple::make(p, q, r);
    const HeightReport report = height(triple, support, /*with_partial_sum=*/false, max_degree);
    const BoundsReport bounds = bounds_report(triple, report.height);

    ScanRecord rec;
    rec.p = p;
    rec.q = q;
    rec.r = r;
    rec.height = report.height;
    rec.witness_exponent = report.witness_exponent;
    rec.bzdega = bounds.bzdega;
    rec.corrected_cap = bounds.corrected_beiter;
    rec.beiter_violated = bounds.beiter_violated;
    // engine_ms stays 0: identical reruns must produce identical bytes,
    // and wall time never does. The field is kept in the schema for
    // round-tripping externally produced files.
    rec.engine_ms = 0;
    return rec;
}

} // namespace

ScanSummary run_scan(const ScanOptions& options) {
    if (options.p < 3 || options.p % 2 == 0 || !is_prime(options.p)) {
        throw std::invalid_argument("scan: --p must be an odd prime");
    }
    if (options.q_max > options.r_max) {
        throw std::invalid_argument("scan: --q-max must not exceed --r-max");
    }
    if (options.jobs < 1) throw std::invalid_argument("scan: --jobs must be >= 1");
    if (options.resume && options.out_path.empty()) {
        throw std::invalid_argument("scan: --resume requires --out");
    }

    const std::int64_t max_degree =
        options.max_degree > 0 ? options.max_degree : engine_degree_cap();

    const std::vector<std::int64_t> primes = primes_up_to(options.r_max);
    std::vector<std::int64_t> q_values;
    for (std::int64_t prime : primes) {
        if (prime > options.p && prime <= options.q_max) q_values.push_back(prime);
    }

    // Reject up front if the largest grid triple would blow the cap.
    {
        std::int64_t worst_q = 0, worst_r = 0;
        for (std::int64_t q : q_values) {
            for (auto it = primes.rbegin(); it != primes.rend(); ++it) {
                if (*it > q) {
                    if ((q - 1) * (*it - 1) > (worst_q - 1) * (worst_r - 1)) {
                        worst_q = q;
                        worst_r = *it;
                    }
                    break;
                }
            }
        }
        if (worst_q != 0) {
            const std::int64_t worst_phi = (options.p - 1) * (worst_q - 1) * (worst_r - 1);
            if (worst_phi > max_degree) {
                throw ResourceLimitError(
                    "scan: triple (" + std::to_string(options.p) + "," +
                    std::to_string(worst_q) + "," + std::to_string(worst_r) + ") has degree " +
                    std::to_string(worst_phi) + " > cap " + std::to_string(max_degree) +
                    " (raise CYCLO_MAX_DEGREE or shrink the grid)");
            }
        }
    }

    // Resumed records: only rows that belong to this grid count.
    std::map<GridKey, ScanRecord> existing;
    if (options.resume && std::filesystem::exists(options.out_path)) {
        std::ifstream in(options.out_path);
        if (!in) throw std::runtime_error("scan: cannot read " + options.out_path);
        std::string line;
        while (std::getline(in, line)) {
            const auto rec = parse_scan_record(line);
            if (!rec || rec->p != options.p) continue;
            if (rec->q <= options.p || rec->q > options.q_max) continue;
            if (rec->r <= rec->q || rec->r > options.r_max) continue;
            if (!is_prime(rec->q) || !is_prime(rec->r)) continue;
            existing.emplace(GridKey{rec->q, rec->r}, *rec);
        }
    }

    std::ofstream append_out;
    if (!options.out_path.empty()) {
        // A killed run can leave the file without a trailing newline;
        // start a fresh line before appending so the first new record
        // does not fuse with the torn one.
        bool needs_newline = false;
        if (options.resume && std::filesystem::exists(options.out_path)) {
            std::ifstream in(options.out_path, std::ios::binary | std::ios::ate);
            if (in && in.tellg() > 0) {
                in.seekg(-1, std::ios::end);
                char last = '\n';
                in.get(last);
                needs_newline = last != '\n';
            }
        }
        append_out.open(options.out_path, options.resume ? std::ios::app : std::ios::trunc);
        if (!append_out) throw std::runtime_error("scan: cannot write " + options.out_path);
        if (needs_newline) append_out << '\n';
    }

    std::mutex sink_mutex; // guards append_out, on_record, new_records
    std::vector<ScanRecord> new_records;
    std::exception_ptr worker_error;
    std::mutex error_mutex;

    const auto scan_q_range = [&](std::size_t begin, std::size_t end) {
        try {
            for (std::size_t qi = begin; qi < end; ++qi) {
                const std::int64_t q = q_values[qi];
                const SparseBinarySupport support = lam_leung_support(options.p, q);
                for (std::int64_t r : primes) {
                    if (r <= q) continue;
                    if (existing.contains(GridKey{q, r})) continue;
                    const ScanRecord rec =
                        compute_record(options.p, support, q, r, max_degree);
                    if (rec.height > rec.corrected_cap) {
                        throw BoundViolationError(
                            "scan: height " + std::to_string(rec.height) + " exceeds 2p/3 cap " +
                            std::to_string(rec.corrected_cap) + " at (" +
                            std::to_string(options.p) + "," + std::to_string(q) + "," +
                            std::to_string(r) + ") - engine defect");
                    }
                    const std::lock_guard<std::mutex> lock(sink_mutex);
                    new_records.push_back(rec);
                    if (append_out.is_open()) {
                        append_out << serialize_scan_record(rec) << '\n';
                        append_out.flush();
                    }
                    if (options.on_record) options.on_record(rec);
                }
            }
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!worker_error) worker_error = std::current_exception();
        }
    };

    const std::size_t jobs =
        std::min<std::size_t>(static_cast<std::size_t>(options.jobs),
                              std::max<std::size_t>(q_values.size(), 1));
    if (jobs <= 1) {
        scan_q_range(0, q_values.size());
    } else {
        // Static contiguous blocks of the q list, one per worker.
        std::vector<std::thread> workers;
        const std::size_t chunk = (q_values.size() + jobs - 1) / jobs;
        for (std::size_t w = 0; w < jobs; ++w) {
            const std::size_t begin = std::min(q_values.size(), w * chunk);
            const std::size_t end = std::min(q_values.size(), begin + chunk);
            workers.emplace_back(scan_q_range, begin, end);
        }
        for (auto& worker : workers) worker.join();
    }
    if (worker_error) std::rethrow_exception(worker_error);

    // Canonical result: everything keyed and sorted by (q, r).
    std::map<GridKey, ScanRecord> final_records = std::move(existing);
    for (const ScanRecord& rec : new_records) final_records.emplace(GridKey{rec.q, rec.r}, rec);

    if (!options.out_path.empty()) {
        append_out.close();
        const std::string tmp_path = options.out_path + ".tmp";
        {
            std::ofstream out(tmp_path, std::ios::trunc);
            if (!out) throw std::runtime_error("scan: cannot write " + tmp_path);
            for (const auto& [key, rec] : final_records) {
                out << serialize_scan_record(rec) << '\n';
            }
        }
        std::filesystem::rename(tmp_path, options.out_path);
    }

    ScanSummary summary;
    summary.p = options.p;
    summary.q_max = options.q_max;
    summary.r_max = options.r_max;
    summary.triples_scanned = static_cast<std::int64_t>(final_records.size());
    summary.newly_computed = static_cast<std::int64_t>(new_records.size());
    for (const auto& [key, rec] : final_records) {
        if (rec.height > summary.restricted_M) {
            summary.restricted_M = rec.height;
            summary.argmax_q = rec.q;
            summary.argmax_r = rec.r;
        }
    }
    return summary;
}

} // namespace cyclo
