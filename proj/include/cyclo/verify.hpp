#pragma once

// Self-check suites behind the `verify` subcommand: each property is
// exhaustive at small parameters and seeded-random at larger ones, and
// the whole report is byte-deterministic for a fixed seed.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo::verify {

struct PropertyResult {
    std::string name;
    bool passed = false;
    std::string detail; // counterexample when failed, scope note when passed
};

struct SuiteReport {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_passed() const {
        for (const auto& p : properties)
            if (!p.passed) return false;
        return true;
    }
};

// suite: one of "all", "binary", "chi", "ternary", "bounds".
// Throws std::invalid_argument for anything else.
std::vector<SuiteReport> run(std::string_view suite, std::uint64_t seed);

// One PASS/FAIL line per property plus per-suite and overall tallies.
void print_report(const std::vector<SuiteReport>& reports, std::ostream& out);

bool all_passed(const std::vector<SuiteReport>& reports);

} // namespace cyclo::verify
