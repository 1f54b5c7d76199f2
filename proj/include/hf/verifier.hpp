#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hf/bounds.hpp"
#include "hf/config.hpp"
#include "hf/hilbert.hpp"
#include "hf/invariants.hpp"

namespace hf {

enum class Regime { A, B };

/// The invariants of one case.  Regime A (J = m, adic) computes the full
/// homological set; in Regime B reg/reg1/B and the section chain stay
/// absent (the associated graded module of a general filtration is not
/// materialized) and coefficients are guard-certified.
struct InvariantReport {
    int d = 0;
    int depth = 0;
    std::optional<int> reg;
    std::optional<int> reg1;
    long long h0 = 0;
    std::optional<long long> B;
    long long r = 0;
    std::vector<long long> e;   // e_0..e_d
    std::vector<long long> xi;  // xi_0..xi_d
    int postulation = 0;
    Regime regime = Regime::A;
    std::vector<std::string> flags;
};

struct EngineConfig {
    std::uint32_t primes[2] = {kDefaultPrime, kVerifyPrime};
    std::uint64_t seed = 1;
    EngineLimits limits;
};

struct AnalyzedCase {
    FiltrationSpec spec;
    InvariantReport rep;
    // companions consumed by the checks
    std::vector<long long> e_sat;     // coefficients of the saturated filtration
    std::optional<int> reg_sat;       // reg of the saturated module (regime A)
    int postulation_sat = 0;
    std::vector<long long> h0_chain;  // h^0(M_0..M_{d-1}) (regime A)
    int pd = 0;
    std::vector<long long> hs;        // H(0..n_max)
    BettiTable betti;                 // of R/Q at the primary prime
    EngineConfig config;
};

/// Full pipeline for one validated filtration.  Throws malformed_input for
/// dimension 0 (outside the standing hypothesis d >= 1).
AnalyzedCase analyze_case(const FiltrationSpec& f, const EngineConfig& cfg);

/// The bound ledger for an analyzed case.
BoundLedger case_ledger(const AnalyzedCase& ac);

enum class CheckStatus { pass, fail, inapplicable, uncertified };

std::string to_string(CheckStatus s);

struct CheckRecord {
    std::string name;
    CheckStatus status = CheckStatus::inapplicable;
    std::string note;  // inapplicability reason or missing certificate
    std::string lhs;   // decimal strings (exact)
    std::string rhs;
    std::optional<long long> margin;  // floor(log2(rhs / max(lhs,1)))
};

struct VerificationVerdict {
    std::vector<CheckRecord> checks;

    bool all_passing() const;  // no fail entries
    int count(CheckStatus s) const;
    const CheckRecord* find(const std::string& name) const;
};

/// One check per bound of the ledger, strictness per the catalog, plus
/// Northcott/Narita positivity in the Cohen-Macaulay case.  Failures are
/// data, never exceptions.
VerificationVerdict check_inequalities(const AnalyzedCase& ac,
                                       const BoundLedger& led);

/// Exact identities: saturation coefficient identity, postulation vs reg,
/// Auslander-Buchsbaum, Hilbert cross-algorithm agreement.
VerificationVerdict check_identities(const AnalyzedCase& ac);

/// analyze + ledger + both check suites in one record.
struct CaseVerdict {
    AnalyzedCase analyzed;
    BoundLedger ledger;
    VerificationVerdict verdict;  // inequalities then identities
};

CaseVerdict run_case(const FiltrationSpec& f, const EngineConfig& cfg);

// ---------------------------------------------------------------------------
// fuzzing

struct FuzzParams {
    int count = 500;
    std::uint64_t seed = 42;
    int n_max = 4;
    int deg_max = 6;
    int gen_max = 5;
    bool with_filtrations = true;  // draw J != m / initial chains sometimes
    /// test hook: corrupt the report before checking (fault injection)
    std::function<void(InvariantReport&)> fault;
};

struct FuzzFailure {
    FiltrationSpec spec;           // shrunk reproducer
    std::vector<CheckRecord> failing;
    int shrink_steps = 0;
};

struct FuzzGroupSummary {
    int d = 0, t = 0;
    long long distinct_functions = 0;  // distinct Hilbert-Samuel signatures
    double log2_enumeration_bound = 0; // from the reg + coefficient bounds
    bool within_bound = true;
};

struct FuzzResult {
    int analyzed = 0;
    int skipped = 0;           // degenerate draws (unit ideal, dimension 0)
    int resource_capped = 0;   // per-case ceilings, reported not fatal
    std::vector<FuzzFailure> failures;
    std::vector<FuzzGroupSummary> finiteness;  // capped-coefficient groups
};

FuzzResult fuzz(const FuzzParams& params, const EngineConfig& cfg);

/// Deterministic canonical text of a spec (the case-file body); also the
/// content that gets hashed for cache ids.
std::string canonical_case_text(const FiltrationSpec& f);

}  // namespace hf
