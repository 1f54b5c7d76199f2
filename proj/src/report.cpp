#include "hf/report.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "hf/sha256.hpp"
#include "hf/version.hpp"

namespace hf {

namespace fs = std::filesystem;

std::string case_id_for(const FiltrationSpec& f, const EngineConfig& cfg) {
    std::string key = canonical_case_text(f);
    key += "tool " + std::string(kToolVersion) + "\n";
    key += "primes " + std::to_string(cfg.primes[0]) + " " +
           std::to_string(cfg.primes[1]) + "\n";
    key += "seed " + std::to_string(cfg.seed) + "\n";
    return sha256_hex(key);
}

namespace {

json ideal_json(const MonomialIdeal& q) {
    json arr = json::array();
    for (const Monomial& g : q.gens()) arr.push_back(g.e);
    return arr;
}

}  // namespace

json build_report_json(const CaseVerdict& cv, const std::string& label) {
    const AnalyzedCase& ac = cv.analyzed;
    const InvariantReport& rep = ac.rep;
    json j;
    j["case_id"] = case_id_for(ac.spec, ac.config);
    j["label"] = label;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["engine"] = {{"primes", {ac.config.primes[0], ac.config.primes[1]}},
                   {"seed", ac.config.seed}};

    json spec;
    spec["n"] = ac.spec.ring.n;
    spec["Q"] = ideal_json(ac.spec.Q);
    spec["J"] = ideal_json(ac.spec.J);
    json chain = json::array();
    for (int k = 1; k <= ac.spec.r(); ++k)
        chain.push_back(ideal_json(ac.spec.initial[static_cast<std::size_t>(k)]));
    spec["chain"] = chain;
    spec["r"] = ac.spec.r();
    j["spec"] = spec;

    json r;
    r["d"] = rep.d;
    r["depth"] = rep.depth;
    r["reg"] = rep.reg ? json(*rep.reg) : json(nullptr);
    r["reg1"] = rep.reg1 ? json(*rep.reg1) : json(nullptr);
    r["h0"] = rep.h0;
    r["B"] = rep.B ? json(*rep.B) : json(nullptr);
    r["r"] = rep.r;
    r["e"] = rep.e;
    r["xi"] = rep.xi;
    r["postulation"] = rep.postulation;
    r["regime"] = rep.regime == Regime::A ? "A" : "B";
    r["flags"] = rep.flags;
    j["report"] = r;

    json betti = json::array();
    for (const BettiTable::Entry& e : ac.betti.entries)
        betti.push_back({e.i, e.j, e.rank});
    j["betti"] = betti;
    j["h0_chain"] = ac.h0_chain;
    j["e_sat"] = ac.e_sat;
    j["reg_sat"] = ac.reg_sat ? json(*ac.reg_sat) : json(nullptr);
    j["hs"] = ac.hs;

    json ledger;
    for (const LedgerEntry& le : cv.ledger.entries) {
        json entry;
        entry["applicable"] = le.applicable;
        if (le.applicable)
            entry["value"] = le.value.to_decimal();
        else
            entry["reason"] = le.reason;
        ledger[le.name] = entry;
    }
    j["ledger"] = ledger;

    json checks = json::array();
    int pass = 0, fail = 0, na = 0, unc = 0;
    for (const CheckRecord& c : cv.verdict.checks) {
        json e;
        e["name"] = c.name;
        e["status"] = to_string(c.status);
        if (!c.note.empty()) e["note"] = c.note;
        if (c.status == CheckStatus::pass || c.status == CheckStatus::fail ||
            c.status == CheckStatus::uncertified) {
            e["lhs"] = c.lhs;
            e["rhs"] = c.rhs;
            if (c.margin) e["margin"] = *c.margin;
        }
        checks.push_back(e);
        switch (c.status) {
            case CheckStatus::pass: ++pass; break;
            case CheckStatus::fail: ++fail; break;
            case CheckStatus::inapplicable: ++na; break;
            case CheckStatus::uncertified: ++unc; break;
        }
    }
    j["checks"] = checks;
    j["summary"] = {{"pass", pass},
                    {"fail", fail},
                    {"inapplicable", na},
                    {"uncertified", unc}};
    return j;
}

ReportCache::ReportCache(std::string dir) : dir_(std::move(dir)) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
}

std::optional<json> ReportCache::lookup(const std::string& case_id,
                                        const EngineConfig& cfg) const {
    fs::path path = fs::path(dir_) / (case_id + ".json");
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    json rec = json::parse(in, nullptr, false);
    bool ok = !rec.is_discarded() && rec.is_object() && rec.contains("tool") &&
              rec.contains("engine");
    if (ok) {
        ok = rec["tool"]["version"] == kToolVersion &&
             rec["engine"]["primes"][0] == cfg.primes[0] &&
             rec["engine"]["primes"][1] == cfg.primes[1] &&
             rec["engine"]["seed"] == cfg.seed;
    }
    if (!ok) {
        std::cerr << "warning: evicting corrupt or stale cache entry "
                  << path.string() << "\n";
        std::error_code ec;
        fs::remove(path, ec);
        return std::nullopt;
    }
    return rec;
}

void ReportCache::store(const std::string& case_id, const json& record) const {
    static std::atomic<unsigned> counter{0};
    fs::path final_path = fs::path(dir_) / (case_id + ".json");
    fs::path tmp = fs::path(dir_) / (case_id + ".tmp." +
                                     std::to_string(::getpid()) + "." +
                                     std::to_string(counter++));
    {
        std::ofstream out(tmp, std::ios::binary);
        out << record.dump(2) << "\n";
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec) fs::remove(tmp, ec);
}

std::string resolve_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("HILBERTFORGE_CACHE"); env && *env)
        return env;
    return ".hilbertforge-cache";
}

}  // namespace hf
