#pragma once

// Restricted-M(p) sweep over the (q, r) prime grid with line-delimited
// JSON persistence. Appends records as they are computed (so an
// interrupted run loses almost nothing), then rewrites the file in
// canonical (q, r) order; the final bytes are independent of the worker
// count and of any interruption/resume history.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace cyclo {

struct ScanRecord {
    int schema_version = 1;
    std::int64_t p = 0;
    std::int64_t q = 0;
    std::int64_t r = 0;
    std::int64_t height = 0;
    std::int64_t witness_exponent = 0;
    std::int64_t bzdega = 0;
    std::int64_t corrected_cap = 0;
    bool beiter_violated = false;
    std::int64_t engine_ms = 0;

    bool operator==(const ScanRecord&) const = default;
};

// One JSON object per line, fields in a fixed order, no whitespace.
std::string serialize_scan_record(const ScanRecord& r);

// Strict parse of one line; nullopt for malformed input or an unknown
// schema_version (partial trailing lines from a killed run land here).
std::optional<ScanRecord> parse_scan_record(std::string_view line);

struct ScanOptions {
    std::int64_t p = 0;
    std::int64_t q_max = 0;
    std::int64_t r_max = 0;
    int jobs = 1;
    std::string out_path; // empty: compute only, no persistence
    bool resume = false;
    std::int64_t max_degree = 0; // <= 0: configured engine cap
    // Invoked once per newly computed triple, possibly from worker
    // threads (serialized by an internal mutex).
    std::function<void(const ScanRecord&)> on_record;
};

struct ScanSummary {
    std::int64_t p = 0;
    std::int64_t q_max = 0;
    std::int64_t r_max = 0;
    std::int64_t restricted_M = 0;   // max height over the grid
    std::int64_t argmax_q = 0;       // smallest (q, r) attaining restricted_M
    std::int64_t argmax_r = 0;
    std::int64_t triples_scanned = 0;
    std::int64_t newly_computed = 0; // triples not reused from a resumed file
};

// Runs the sweep. Throws std::invalid_argument for bad parameters,
// ResourceLimitError when the largest grid triple exceeds the degree cap,
// BoundViolationError if any height exceeds floor(2p/3), and
// std::runtime_error when the output file cannot be written.
ScanSummary run_scan(const ScanOptions& options);

} // namespace cyclo
