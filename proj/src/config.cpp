#include "cyclo/config.hpp"

#include <cstdlib>
#include <string>

namespace cyclo {
namespace {

std::int64_t cap_from_env(std::int64_t fallback) {
    const char* raw = std::getenv("CYCLO_MAX_DEGREE");
    if (raw == nullptr || *raw == '\0') return fallback;
    try {
        const std::int64_t value = std::stoll(raw);
        if (value > 0) return value;
    } catch (const std::exception&) {
        // fall through to the default on unparsable input
    }
    return fallback;
}

} // namespace

std::int64_t oracle_degree_cap() { return cap_from_env(kDefaultOracleDegreeCap); }

std::int64_t engine_degree_cap() { return cap_from_env(kDefaultEngineDegreeCap); }

} // namespace cyclo
