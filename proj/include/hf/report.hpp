#pragma once

#include <optional>
#include <string>

#include "json.hpp"

#include "hf/verifier.hpp"

namespace hf {

using json = nlohmann::ordered_json;

/// Content-addressed case id: hash of the canonical spec text plus the
/// engine configuration (tool version, primes, seed).  File renames and
/// labels do not participate.
std::string case_id_for(const FiltrationSpec& f, const EngineConfig& cfg);

/// The deterministic record for one verified case.  Construction order is
/// fixed, so serialization is byte-stable for fixed seeds/primes; timings
/// deliberately live outside this object.
json build_report_json(const CaseVerdict& cv, const std::string& label);

/// Filesystem cache of report records, keyed by case id.  Stores are
/// atomic (write-temp-then-rename); corrupt or mismatching entries are
/// evicted, never trusted.
class ReportCache {
public:
    explicit ReportCache(std::string dir);

    std::optional<json> lookup(const std::string& case_id,
                               const EngineConfig& cfg) const;
    void store(const std::string& case_id, const json& record) const;

    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
};

/// --cache-dir flag value, else HILBERTFORGE_CACHE, else ".hilbertforge-cache".
std::string resolve_cache_dir(const std::string& flag_value);

}  // namespace hf
