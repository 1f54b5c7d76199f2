#include "hf/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "hf/errors.hpp"
#include "hf/rng.hpp"

namespace hf {

std::string to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "pass";
        case CheckStatus::fail: return "fail";
        case CheckStatus::inapplicable: return "inapplicable";
        case CheckStatus::uncertified: return "uncertified";
    }
    return "?";
}

bool VerificationVerdict::all_passing() const {
    for (const CheckRecord& c : checks)
        if (c.status == CheckStatus::fail) return false;
    return true;
}

int VerificationVerdict::count(CheckStatus s) const {
    int n = 0;
    for (const CheckRecord& c : checks)
        if (c.status == s) ++n;
    return n;
}

const CheckRecord* VerificationVerdict::find(const std::string& name) const {
    for (const CheckRecord& c : checks)
        if (c.name == name) return &c;
    return nullptr;
}

namespace {

struct HomologicalData {
    BettiTable betti_q;
    BettiTable betti_sat;
    HomologicalProfile prof;
    int reg_sat = 0;
    long long h0 = 0;
    std::vector<int> h0_dims;
    std::optional<SectionChainReport> chain;
};

HomologicalData homological_at_prime(const MonomialIdeal& Q,
                                     const MonomialIdeal& Qsat, int n,
                                     std::uint32_t p, int d, bool regime_a,
                                     std::uint64_t seed,
                                     const EngineLimits& lim) {
    RingSpec ring{n, p};
    HomologicalData h;
    h.betti_q = betti_of_ideal(Q, ring, lim);
    h.betti_sat = betti_of_ideal(Qsat, ring, lim);
    h.prof = homological_profile(h.betti_q, h.betti_sat, n);
    h.reg_sat = h.betti_sat.regularity();
    TruncatedGradedModule e = cyclic_module(Q, h.prof.reg + 1, ring);
    H0Chain hc = h0_chain(e, h.prof.reg);
    h.h0 = hc.total();
    h.h0_dims = hc.dims;
    if (regime_a) h.chain = section_chain(Q, ring, d, h.prof.reg, seed, lim);
    return h;
}

}  // namespace

AnalyzedCase analyze_case(const FiltrationSpec& f, const EngineConfig& cfg) {
    validate_filtration(f);
    const int n = f.ring.n;
    const int d = krull_dim(f.Q);
    if (d == 0)
        throw malformed_input(
            "analyze_case: dim M = 0 is outside the supported range (d >= 1)");
    const bool regime_a = f.regime_a();
    const EngineLimits& lim = cfg.limits;

    AnalyzedCase ac;
    ac.spec = f;
    ac.config = cfg;
    ac.spec.ring.p = cfg.primes[0];

    MonomialIdeal Qsat = saturate(f.Q);
    if (!Qsat.is_unit() && krull_dim(Qsat) != d)
        throw error("analyze_case: saturation changed the dimension");

    HomologicalData h0data =
        homological_at_prime(f.Q, Qsat, n, cfg.primes[0], d, regime_a,
                             cfg.seed, lim);
    HomologicalData h1data =
        homological_at_prime(f.Q, Qsat, n, cfg.primes[1], d, regime_a,
                             cfg.seed, lim);

    InvariantReport& rep = ac.rep;
    rep.d = d;
    rep.depth = h0data.prof.depth;
    rep.h0 = h0data.h0;
    rep.r = f.r();
    rep.regime = regime_a ? Regime::A : Regime::B;
    ac.pd = h0data.prof.pd;
    ac.betti = h0data.betti_q;

    auto flag_mismatch = [&](bool same, const char* what) {
        if (!same)
            rep.flags.push_back(std::string("char-sensitive:") + what);
    };
    flag_mismatch(h0data.prof.reg == h1data.prof.reg, "reg");
    flag_mismatch(h0data.prof.pd == h1data.prof.pd, "pd");
    flag_mismatch(h0data.reg_sat == h1data.reg_sat, "reg_sat");
    flag_mismatch(h0data.h0 == h1data.h0, "h0");
    if (regime_a) {
        flag_mismatch(h0data.chain->B == h1data.chain->B, "B");
        flag_mismatch(h0data.chain->h0_per_level == h1data.chain->h0_per_level,
                      "h0_chain");
    }

    if (regime_a) {
        rep.reg = h0data.prof.reg;
        rep.reg1 = h0data.prof.reg1;
        rep.B = h0data.chain->B;
        ac.h0_chain = h0data.chain->h0_per_level;
        ac.reg_sat = h0data.reg_sat;
    }

    // Hilbert-Samuel window and coefficient fit (prime-independent)
    const int guard = d + 5;
    HilbertSamuel hs(f);
    HilbertCoefficients fit;
    if (regime_a) {
        int n_max = h0data.prof.reg + d + guard;
        for (int i = 0; i <= n_max; ++i) ac.hs.push_back(hs.value(i));
        fit = fit_coefficients(ac.hs, d, FitMode::local, h0data.prof.reg, guard);
    } else {
        int n_max = 2 * d + 8;
        for (;;) {
            for (int i = static_cast<int>(ac.hs.size()); i <= n_max; ++i)
                ac.hs.push_back(hs.value(i));
            try {
                fit = fit_coefficients(ac.hs, d, FitMode::local, -1, guard);
                break;
            } catch (const resource_limit&) {
                if (n_max >= lim.fit_window_ceiling) throw;
                n_max = std::min(lim.fit_window_ceiling, n_max * 2);
            }
        }
        rep.flags.push_back("postulation:guard-certified");
    }
    rep.e = fit.e;
    rep.xi = xi_values(fit.e);
    rep.postulation = fit.postulation;

    if (!regime_a) {
        // when the reg bound from the first d-t+1 coefficients is small
        // enough, extend the window so the postulation consequence check has
        // data to look at
        BigInt bound = reg_bound_first_coeffs(
            rep.xi[static_cast<std::size_t>(d - rep.depth)], rep.r, d,
            rep.depth, lim);
        if (bound >= BigInt(0) && bound <= BigInt(64)) {
            int want = static_cast<int>(bound.to_i64()) + d + 1;
            for (int i = static_cast<int>(ac.hs.size()); i <= want; ++i)
                ac.hs.push_back(hs.value(i));
        }
    }

    // saturated companion fit (for the coefficient identity)
    FiltrationSpec fsat = saturated_filtration(f);
    if (fsat.Q.is_unit()) throw error("analyze_case: saturation became unit");
    HilbertSamuel hss(fsat);
    std::vector<long long> hs_sat;
    HilbertCoefficients fit_sat;
    if (regime_a) {
        int n_max = h0data.reg_sat + d + guard;
        for (int i = 0; i <= n_max; ++i) hs_sat.push_back(hss.value(i));
        fit_sat =
            fit_coefficients(hs_sat, d, FitMode::local, h0data.reg_sat, guard);
    } else {
        int n_max = 2 * d + 8;
        for (;;) {
            for (int i = static_cast<int>(hs_sat.size()); i <= n_max; ++i)
                hs_sat.push_back(hss.value(i));
            try {
                fit_sat = fit_coefficients(hs_sat, d, FitMode::local, -1, guard);
                break;
            } catch (const resource_limit&) {
                if (n_max >= lim.fit_window_ceiling) throw;
                n_max = std::min(lim.fit_window_ceiling, n_max * 2);
            }
        }
    }
    ac.e_sat = fit_sat.e;
    ac.postulation_sat = fit_sat.postulation;
    return ac;
}

BoundLedger case_ledger(const AnalyzedCase& ac) {
    BoundInputs in;
    in.d = ac.rep.d;
    in.t = ac.rep.depth;
    in.r = ac.rep.r;
    // the associated graded module is generated in degree 0 for the adic
    // maximal filtration and in degrees <= r in general
    in.delta_prime = ac.rep.regime == Regime::A ? 0 : ac.rep.r;
    in.e = ac.rep.e;
    in.xi = ac.rep.xi;
    if (ac.rep.reg) in.reg = *ac.rep.reg;
    if (ac.rep.reg1) in.reg1 = *ac.rep.reg1;
    if (ac.reg_sat) in.reg_sat = *ac.reg_sat;
    in.h0 = ac.rep.h0;
    if (ac.rep.B) in.B = *ac.rep.B;
    in.h0_chain = ac.h0_chain;
    return build_ledger(in, ac.config.limits);
}

namespace {

void push_check(VerificationVerdict& vv, std::string name, CheckStatus st,
                std::string note, const BigInt& lhs, const BigInt& rhs,
                bool with_margin) {
    CheckRecord rec;
    rec.name = std::move(name);
    rec.status = st;
    rec.note = std::move(note);
    rec.lhs = lhs.to_decimal();
    rec.rhs = rhs.to_decimal();
    if (with_margin && rhs.sign() > 0) rec.margin = log2_margin(lhs, rhs);
    vv.checks.push_back(std::move(rec));
}

struct CheckCtx {
    VerificationVerdict vv;
    bool uncertified = false;  // guard-certified coefficients / char flags

    void ineq(std::string name, const BigInt& lhs, const BigInt& rhs,
              bool strict, std::string note = "") {
        bool ok = strict ? lhs < rhs : lhs <= rhs;
        CheckStatus st = !ok ? CheckStatus::fail
                             : (uncertified ? CheckStatus::uncertified
                                            : CheckStatus::pass);
        if (ok && uncertified && note.empty())
            note = "inputs guard-certified, not proved";
        push_check(vv, std::move(name), st, std::move(note), lhs, rhs, true);
    }

    void ineq_ledger(std::string name, const BigInt& lhs,
                     const LedgerEntry* entry, bool strict) {
        if (!entry || !entry->applicable) {
            skip(std::move(name), entry ? entry->reason : "not in ledger");
            return;
        }
        ineq(std::move(name), lhs, entry->value, strict);
    }

    void equal(std::string name, const BigInt& lhs, const BigInt& rhs,
               std::string note = "") {
        bool ok = lhs == rhs;
        CheckStatus st = !ok ? CheckStatus::fail
                             : (uncertified ? CheckStatus::uncertified
                                            : CheckStatus::pass);
        if (ok && uncertified && note.empty())
            note = "inputs guard-certified, not proved";
        push_check(vv, std::move(name), st, std::move(note), lhs, rhs, true);
    }

    void skip(std::string name, std::string reason) {
        push_check(vv, std::move(name), CheckStatus::inapplicable,
                   std::move(reason), BigInt(0), BigInt(0), false);
    }
};

long long evaluate_fit_value(const std::vector<long long>& e, int d,
                             long long n) {
    HilbertCoefficients c;
    c.d = d;
    c.mode = FitMode::local;
    c.e = e;
    return evaluate_fit(c, n);
}

}  // namespace

VerificationVerdict check_inequalities(const AnalyzedCase& ac,
                                       const BoundLedger& led) {
    const InvariantReport& rep = ac.rep;
    const int d = rep.d, t = rep.depth;
    CheckCtx ctx;
    ctx.uncertified = !rep.flags.empty();

    const bool have_reg = rep.reg.has_value();

    // reg-side bounds (regime A)
    if (have_reg) {
        ctx.ineq_ledger("trivedi_reg1", BigInt(*rep.reg1),
                        led.find("trivedi_reg1_bound"), false);
        ctx.ineq_ledger("reg1_factorial", BigInt(*rep.reg1),
                        led.find("reg1_factorial_bound"), false);
        ctx.ineq_ledger("reg_all_coeffs", BigInt(*rep.reg),
                        led.find("reg_bound_all_coeffs"), true);
        ctx.ineq_ledger("reg_first_coeffs", BigInt(*rep.reg),
                        led.find("reg_bound_first_coeffs"), false);
        ctx.ineq_ledger("reg_sat_h0", BigInt(*rep.reg),
                        led.find("reg_sat_h0_bound"), false);
        for (int i = 0; i < d; ++i)
            ctx.ineq_ledger("h0_chain_" + std::to_string(i),
                            BigInt(ac.h0_chain[static_cast<std::size_t>(i)]),
                            led.find("h0_chain_bound_" + std::to_string(i)),
                            false);
        ctx.ineq_ledger("section_length", BigInt(*rep.B),
                        led.find("section_length_bound"), true);
        // h0 <= P(n) for every computed n >= reg of the saturation
        BigInt min_p;
        bool first = true;
        for (int nn = *ac.reg_sat; nn < static_cast<int>(ac.hs.size()); ++nn) {
            BigInt pv(evaluate_fit_value(rep.e, d, nn));
            if (first || pv < min_p) min_p = pv;
            first = false;
        }
        if (!first)
            ctx.ineq("h0_poly", BigInt(rep.h0), min_p, false);
        else
            ctx.skip("h0_poly", "no computed n at or above reg of saturation");
    } else {
        const char* why = "requires reg of the associated graded module";
        for (const char* nm :
             {"trivedi_reg1", "reg1_factorial", "reg_all_coeffs",
              "reg_first_coeffs", "reg_sat_h0", "section_length", "h0_poly"})
            ctx.skip(nm, why);
        // regime B checks the postulation consequence of the reg bound
        BigInt bound = reg_bound_first_coeffs(
            rep.xi[static_cast<std::size_t>(d - t)], rep.r, d, t,
            ac.config.limits);
        if (bound <= BigInt(static_cast<long long>(ac.hs.size()) - 1)) {
            long long from = bound.to_i64();
            long long bad = 0;
            for (long long nn = std::max(0ll, from);
                 nn < static_cast<long long>(ac.hs.size()); ++nn)
                if (evaluate_fit_value(rep.e, d, nn) !=
                    ac.hs[static_cast<std::size_t>(nn)])
                    ++bad;
            ctx.equal("hs_poly_beyond_reg_bound", BigInt(bad), BigInt(0),
                      "window reaches the reg bound");
        } else {
            ctx.skip("hs_poly_beyond_reg_bound",
                     "reg bound exceeds the computed window (" +
                         format_bound(bound) + ")");
        }
    }

    // coefficient bounds from preceding coefficients
    for (int i = 1; i <= d; ++i) {
        std::string si = std::to_string(i);
        const LedgerEntry* strong = led.find("next_coeff_bound_" + si);
        long long ei = rep.e[static_cast<std::size_t>(i)];
        long long signed_lhs = (i % 2 == 1) ? ei : -ei;  // (-1)^{i-1} e_i
        ctx.ineq_ledger("next_coeff_" + si, BigInt(signed_lhs), strong, false);
        if (const LedgerEntry* weak = led.find("next_coeff_bound_weak_" + si);
            weak && weak->applicable)
            ctx.ineq("next_coeff_weak_" + si, BigInt(signed_lhs), weak->value,
                     true);
    }

    // tail coefficient bounds, depth >= 1
    if (t >= 1) {
        for (int j = d - t + 1; j <= d; ++j) {
            std::string sj = std::to_string(j);
            BigInt aj = BigInt(rep.e[static_cast<std::size_t>(j)]).abs();
            ctx.ineq_ledger("tail_coeff_" + sj, aj,
                            led.find("tail_coeff_bound_" + sj), false);
            const LedgerEntry* adic = led.find("tail_coeff_bound_adic_" + sj);
            if (rep.r == 0)
                ctx.ineq_ledger("tail_coeff_adic_" + sj, aj, adic, true);
            else
                ctx.skip("tail_coeff_adic_" + sj,
                         "requires adic filtration (r = 0)");
            if (const LedgerEntry* cm = led.find("tail_coeff_bound_cm_" + sj);
                cm && cm->applicable)
                ctx.ineq("tail_coeff_cm_" + sj, aj, cm->value, false);
        }
    } else {
        ctx.skip("tail_coeff", "requires depth >= 1");
        ctx.skip("tail_coeff_adic", "requires depth >= 1");
    }

    // section-quotient coefficient bounds
    for (int i = 1; i <= d; ++i) {
        std::string si = std::to_string(i);
        BigInt ai = BigInt(rep.e[static_cast<std::size_t>(i)]).abs();
        ctx.ineq_ledger("coeff_section_" + si, ai,
                        led.find("coeff_section_bound_" + si), true);
        if (i <= d - 1)
            ctx.ineq_ledger("graded_coeff_section_" + si, ai,
                            led.find("graded_coeff_section_bound_" + si),
                            false);
    }

    // positivity in the Cohen-Macaulay case
    if (t == d) {
        ctx.ineq("northcott", BigInt(0), BigInt(rep.e[1]), false);
        if (d >= 2)
            ctx.ineq("narita", BigInt(0), BigInt(rep.e[2]), false);
        else
            ctx.skip("narita", "requires d >= 2");
    } else {
        ctx.skip("northcott", "requires depth = d");
        ctx.skip("narita", "requires depth = d");
    }
    return std::move(ctx.vv);
}

VerificationVerdict check_identities(const AnalyzedCase& ac) {
    const InvariantReport& rep = ac.rep;
    const int d = rep.d;
    CheckCtx ctx;
    ctx.uncertified = !rep.flags.empty();

    // h0 = (-1)^d (e_d - e_d(saturated))
    long long diff = rep.e[static_cast<std::size_t>(d)] -
                     ac.e_sat[static_cast<std::size_t>(d)];
    long long rhs = (d % 2) ? -diff : diff;
    ctx.equal("sat_coeff_identity", BigInt(rep.h0), BigInt(rhs));

    // e_i agree below the top coefficient
    long long mismatches = 0;
    for (int i = 0; i < d; ++i)
        if (rep.e[static_cast<std::size_t>(i)] !=
            ac.e_sat[static_cast<std::size_t>(i)])
            ++mismatches;
    ctx.equal("sat_lower_coeff_agreement", BigInt(mismatches), BigInt(0));

    if (rep.reg)
        ctx.ineq("postulation_reg", BigInt(rep.postulation), BigInt(*rep.reg),
                 false);
    else
        ctx.skip("postulation_reg", "requires reg of the associated graded module");

    ctx.equal("auslander_buchsbaum", BigInt(rep.depth + ac.pd),
              BigInt(ac.spec.ring.n));

    ctx.equal("e0_positive", BigInt(rep.e[0] >= 1 ? 1 : 0), BigInt(1));

    ctx.equal("h0_depth_consistency",
              BigInt((rep.h0 == 0) == (rep.depth >= 1) ? 1 : 0), BigInt(1));

    // two independent Hilbert-function algorithms agree
    {
        int upto = std::max(8, (rep.reg ? *rep.reg : 0) + d + 3);
        std::vector<long long> numer =
            series_numerator(ac.spec.Q, ac.config.limits);
        std::vector<long long> series =
            expand_series(numer, ac.spec.ring.n, upto + 1);
        long long bad = 0;
        for (int j = 0; j <= upto; ++j)
            if (series[static_cast<std::size_t>(j)] !=
                hilbert_function(ac.spec.Q, j))
                ++bad;
        ctx.equal("hilbert_series_agreement", BigInt(bad), BigInt(0));
    }

    // regime A: the Hilbert-Samuel function equals its polynomial from reg on
    if (rep.reg) {
        long long bad = 0;
        for (int nn = *rep.reg; nn < static_cast<int>(ac.hs.size()); ++nn)
            if (evaluate_fit_value(rep.e, d, nn) !=
                ac.hs[static_cast<std::size_t>(nn)])
                ++bad;
        ctx.equal("hs_window_agreement", BigInt(bad), BigInt(0));
    } else {
        ctx.skip("hs_window_agreement", "requires reg of the associated graded module");
    }
    return std::move(ctx.vv);
}

CaseVerdict run_case(const FiltrationSpec& f, const EngineConfig& cfg) {
    CaseVerdict cv{analyze_case(f, cfg), {}, {}};
    cv.ledger = case_ledger(cv.analyzed);
    cv.verdict = check_inequalities(cv.analyzed, cv.ledger);
    VerificationVerdict ids = check_identities(cv.analyzed);
    cv.verdict.checks.insert(cv.verdict.checks.end(), ids.checks.begin(),
                             ids.checks.end());
    return cv;
}

std::string canonical_case_text(const FiltrationSpec& f) {
    auto ideal_line = [](const char* key, const MonomialIdeal& q) {
        std::string s = key;
        for (const Monomial& g : q.gens()) {
            s += " [";
            for (std::size_t i = 0; i < g.e.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(g.e[i]);
            }
            s += "]";
        }
        return s + "\n";
    };
    std::string out = "ring " + std::to_string(f.ring.n) + "\n";
    out += ideal_line("Q", f.Q);
    out += ideal_line("J", f.J);
    for (int k = 1; k <= f.r(); ++k)
        out += ideal_line(("N" + std::to_string(k)).c_str(),
                          f.initial[static_cast<std::size_t>(k)]);
    return out;
}

// ---------------------------------------------------------------------------
// fuzzing

namespace {

Monomial random_monomial(SplitMix64& rng, int n, int deg_max) {
    int deg = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(deg_max)));
    std::vector<int> e(n, 0);
    for (int i = 0; i < deg; ++i)
        e[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))]++;
    return Monomial(std::move(e));
}

std::optional<FiltrationSpec> random_spec(SplitMix64& rng,
                                          const FuzzParams& params,
                                          std::string& skip_reason) {
    int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.n_max)));
    int gens = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(params.gen_max)));
    std::vector<Monomial> g;
    for (int i = 0; i < gens; ++i) g.push_back(random_monomial(rng, n, params.deg_max));
    FiltrationSpec f;
    f.ring.n = n;
    f.Q = minimalize(n, std::move(g));
    if (f.Q.is_unit()) {
        skip_reason = "degenerate draw: unit ideal";
        return std::nullopt;
    }
    if (krull_dim(f.Q) == 0) {
        skip_reason = "degenerate draw: dimension 0";
        return std::nullopt;
    }
    f.J = MonomialIdeal::maximal(n);
    f.initial = {MonomialIdeal::unit(n)};

    if (params.with_filtrations && rng.below(4) == 0) {
        // m-primary J from small pure powers plus an optional extra monomial
        std::vector<Monomial> jg;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng.below(3));
            jg.emplace_back(std::move(e));
        }
        if (rng.below(2) == 0) jg.push_back(random_monomial(rng, n, 2));
        f.J = minimalize(n, std::move(jg));
        if (rng.below(2) == 0) {
            // one-step initial chain: N_1 = J + Q + one extra monomial
            MonomialIdeal base = ideal_sum(f.J, f.Q);
            MonomialIdeal n1 = ideal_sum(
                base, MonomialIdeal(n, {random_monomial(rng, n, 2)}));
            if (!n1.is_unit() && !(n1 == base)) f.initial.push_back(n1);
        }
    }
    try {
        validate_filtration(f);
    } catch (const error& e) {
        skip_reason = std::string("degenerate draw: ") + e.what();
        return std::nullopt;
    }
    return f;
}

std::vector<CheckRecord> failing_checks(const FiltrationSpec& f,
                                        const EngineConfig& cfg,
                                        const std::function<void(InvariantReport&)>& fault) {
    AnalyzedCase ac = analyze_case(f, cfg);
    if (fault) fault(ac.rep);
    BoundLedger led = case_ledger(ac);
    VerificationVerdict vv = check_inequalities(ac, led);
    VerificationVerdict ids = check_identities(ac);
    std::vector<CheckRecord> out;
    for (const CheckRecord& c : vv.checks)
        if (c.status == CheckStatus::fail) out.push_back(c);
    for (const CheckRecord& c : ids.checks)
        if (c.status == CheckStatus::fail) out.push_back(c);
    return out;
}

/// greedy shrink: drop a generator, lower an exponent, forget the
/// filtration; keep any candidate that still fails
FiltrationSpec shrink_failure(FiltrationSpec spec, const EngineConfig& cfg,
                              const std::function<void(InvariantReport&)>& fault,
                              int& steps) {
    const int budget = 400;
    int evals = 0;
    bool improved = true;
    while (improved && evals < budget) {
        improved = false;
        std::vector<FiltrationSpec> candidates;
        // simplify the filtration first
        if (!spec.regime_a()) {
            FiltrationSpec c = spec;
            c.J = MonomialIdeal::maximal(spec.ring.n);
            c.initial = {MonomialIdeal::unit(spec.ring.n)};
            candidates.push_back(std::move(c));
        }
        for (std::size_t k = 0; k < spec.Q.gens().size(); ++k) {
            std::vector<Monomial> g = spec.Q.gens();
            g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
            FiltrationSpec c = spec;
            c.Q = minimalize(spec.ring.n, std::move(g));
            candidates.push_back(std::move(c));
        }
        for (std::size_t k = 0; k < spec.Q.gens().size(); ++k) {
            for (int v = 0; v < spec.ring.n; ++v) {
                if (spec.Q.gens()[k].e[static_cast<std::size_t>(v)] == 0) continue;
                std::vector<Monomial> g = spec.Q.gens();
                Monomial m = g[k];
                m.e[static_cast<std::size_t>(v)]--;
                if (m.is_one()) continue;
                g[k] = m;
                FiltrationSpec c = spec;
                c.Q = minimalize(spec.ring.n, std::move(g));
                candidates.push_back(std::move(c));
            }
        }
        for (FiltrationSpec& c : candidates) {
            if (evals >= budget) break;
            if (c.Q.is_unit()) continue;
            try {
                if (krull_dim(c.Q) == 0) continue;
                validate_filtration(c);
                ++evals;
                if (!failing_checks(c, cfg, fault).empty()) {
                    spec = std::move(c);
                    ++steps;
                    improved = true;
                    break;
                }
            } catch (const error&) {
                continue;
            }
        }
    }
    return spec;
}

}  // namespace

FuzzResult fuzz(const FuzzParams& params, const EngineConfig& cfg) {
    FuzzResult res;
    SplitMix64 rng(params.seed);
    const int cap = 3;  // coefficient cap for the finiteness tally
    std::map<std::pair<int, int>, std::set<std::string>> signatures;

    int draws_budget = params.count * 50;
    while (res.analyzed < params.count && draws_budget-- > 0) {
        std::string skip_reason;
        std::optional<FiltrationSpec> f = random_spec(rng, params, skip_reason);
        if (!f) {
            ++res.skipped;
            continue;
        }
        EngineConfig case_cfg = cfg;
        case_cfg.seed = rng.next();
        try {
            AnalyzedCase ac = analyze_case(*f, case_cfg);
            if (params.fault) params.fault(ac.rep);
            BoundLedger led = case_ledger(ac);
            VerificationVerdict vv = check_inequalities(ac, led);
            VerificationVerdict ids = check_identities(ac);
            std::vector<CheckRecord> fails;
            for (const CheckRecord& c : vv.checks)
                if (c.status == CheckStatus::fail) fails.push_back(c);
            for (const CheckRecord& c : ids.checks)
                if (c.status == CheckStatus::fail) fails.push_back(c);
            ++res.analyzed;
            if (!fails.empty()) {
                FuzzFailure fail;
                fail.shrink_steps = 0;
                fail.spec = shrink_failure(*f, case_cfg, params.fault,
                                           fail.shrink_steps);
                fail.failing = failing_checks(fail.spec, case_cfg, params.fault);
                if (fail.failing.empty()) fail.failing = fails;
                res.failures.push_back(std::move(fail));
            } else if (ac.rep.regime == Regime::A) {
                // Hilbert-Samuel signature tally for capped coefficients
                int d = ac.rep.d, t = ac.rep.depth;
                if (ac.rep.xi[static_cast<std::size_t>(d - t)] <= cap) {
                    std::string sig;
                    for (long long v : ac.rep.e) sig += std::to_string(v) + ",";
                    sig += "|";
                    for (int nn = 0;
                         nn <= *ac.rep.reg && nn < static_cast<int>(ac.hs.size());
                         ++nn)
                        sig += std::to_string(ac.hs[static_cast<std::size_t>(nn)]) + ",";
                    signatures[{d, t}].insert(sig);
                }
            }
        } catch (const resource_limit&) {
            ++res.resource_capped;
            ++res.analyzed;
        } catch (const error& e) {
            // pipeline errors on valid input are failures worth a reproducer
            FuzzFailure fail;
            fail.spec = *f;
            CheckRecord rec;
            rec.name = "pipeline";
            rec.status = CheckStatus::fail;
            rec.note = e.what();
            fail.failing.push_back(std::move(rec));
            res.failures.push_back(std::move(fail));
            ++res.analyzed;
        }
    }

    // finite Hilbert-Samuel function tally vs. the derived enumeration bound
    for (const auto& [key, sigs] : signatures) {
        auto [d, t] = key;
        FuzzGroupSummary g;
        g.d = d;
        g.t = t;
        g.distinct_functions = static_cast<long long>(sigs.size());
        BigInt reg_bound =
            reg_bound_first_coeffs(cap, 0, d, t, cfg.limits);
        double log2_a = static_cast<double>(reg_bound.bit_length());
        double log2_polys = 0;
        double max_coeff_log2 = std::log2(2.0 * cap + 1);
        for (int j = 0; j <= d; ++j) {
            double lj;
            if (j <= d - t || t == 0) {
                lj = std::log2(2.0 * cap + 1);
            } else {
                unsigned long long jf = BigInt::factorial_u64(static_cast<unsigned>(j));
                double exp = 3.0 * j * (d - t + 1) * static_cast<double>(jf);
                lj = exp * std::log2(cap + 1.0) + 1.0;
            }
            log2_polys += lj;
            max_coeff_log2 = std::max(max_coeff_log2, lj);
        }
        double log2_pmax =
            std::log2(d + 1.0) + max_coeff_log2 + d * (log2_a + 1.0);
        g.log2_enumeration_bound =
            log2_polys + std::pow(2.0, log2_a) * (log2_pmax + 1.0);
        g.within_bound =
            std::log2(static_cast<double>(g.distinct_functions) + 1.0) <=
            g.log2_enumeration_bound;
        res.finiteness.push_back(g);
    }
    return res;
}

}  // namespace hf
