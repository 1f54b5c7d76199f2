#include "hf/hilbert.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf {

bool FiltrationSpec::regime_a() const {
    return adic() && J == MonomialIdeal::maximal(ring.n);
}

void validate_filtration(const FiltrationSpec& f) {
    if (f.Q.is_unit())
        throw malformed_input("filtration: Q is the unit ideal (M = 0)");
    if (f.Q.vars() != f.ring.n || f.J.vars() != f.ring.n)
        throw malformed_input("filtration: variable count mismatch");
    if (f.J.is_zero() || f.J.is_unit() || !is_m_primary(f.J))
        throw malformed_input("filtration: J is not m-primary");
    if (f.initial.empty() || !f.initial[0].is_unit())
        throw malformed_input("filtration: N_0 must be the unit ideal");

    const int r = f.r();
    for (int k = 0; k <= r; ++k) {
        const MonomialIdeal& nk = f.initial[k];
        if (nk.vars() != f.ring.n)
            throw malformed_input("filtration: N_" + std::to_string(k) +
                                  " variable count mismatch");
        if (!nk.contains(f.Q))
            throw malformed_input("filtration: N_" + std::to_string(k) +
                                  " does not contain Q");
    }
    for (int k = 0; k + 1 <= r; ++k) {
        const MonomialIdeal& nk = f.initial[k];
        const MonomialIdeal& nk1 = f.initial[k + 1];
        // descending chain
        for (const Monomial& g : nk1.gens())
            if (!nk.contains(g))
                throw malformed_input("filtration: N_" + std::to_string(k + 1) +
                                      " is not contained in N_" +
                                      std::to_string(k) + " (generator " +
                                      g.str() + ")");
        // J N_k + Q subset of N_{k+1}
        MonomialIdeal step = ideal_sum(ideal_product(f.J, nk), f.Q);
        for (const Monomial& g : step.gens())
            if (!nk1.contains(g))
                throw malformed_input(
                    "filtration: J*N_" + std::to_string(k) +
                    " + Q is not contained in N_" + std::to_string(k + 1) +
                    " (generator " + g.str() + ")");
        if (k + 1 == r && step == nk1)
            throw malformed_input(
                "filtration: r is not minimal (N_" + std::to_string(r) +
                " = J*N_" + std::to_string(r - 1) + " + Q)");
    }
}

FiltrationSpec saturated_filtration(const FiltrationSpec& f) {
    FiltrationSpec s = f;
    s.Q = saturate(f.Q);
    for (MonomialIdeal& nk : s.initial) {
        if (!nk.is_unit()) nk = ideal_sum(nk, s.Q);
    }
    // trim redundant tail entries so r stays minimal
    while (s.r() >= 1) {
        MonomialIdeal step =
            ideal_sum(ideal_product(s.J, s.initial[s.r() - 1]), s.Q);
        if (!(step == s.initial[s.r()])) break;
        s.initial.pop_back();
    }
    return s;
}

long long hilbert_function(const MonomialIdeal& q, int j) {
    if (q.is_unit()) throw malformed_input("hilbert_function: unit ideal");
    if (j < 0) return 0;
    return standard_monomial_count(q, j);
}

namespace {

std::vector<long long> poly_mul(const std::vector<long long>& a,
                                const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

void poly_trim(std::vector<long long>& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

struct SeriesCtx {
    const EngineLimits& lim;
    long long nodes = 0;
};

std::vector<long long> series_rec(const MonomialIdeal& q, int depth,
                                  SeriesCtx& ctx) {
    if (depth > ctx.lim.series_depth_ceiling)
        throw resource_limit("series_numerator: recursion depth ceiling");
    if (++ctx.nodes > ctx.lim.series_node_ceiling)
        throw resource_limit("series_numerator: node ceiling");
    if (q.is_unit()) return {};   // R/R = 0
    if (q.is_zero()) return {1};

    const int n = q.vars();
    // variable occurring in the most generators
    std::vector<int> uses(n, 0);
    for (const Monomial& g : q.gens())
        for (int v = 0; v < n; ++v)
            if (g.e[v] > 0) ++uses[v];
    int pivot_var = -1, best = 1;
    for (int v = 0; v < n; ++v)
        if (uses[v] > best) {
            best = uses[v];
            pivot_var = v;
        }

    if (pivot_var < 0) {
        // generators pairwise coprime: a regular sequence
        std::vector<long long> r{1};
        for (const Monomial& g : q.gens()) {
            std::vector<long long> f(g.degree() + 1, 0);
            f[0] = 1;
            f[g.degree()] = -1;
            r = poly_mul(r, f);
        }
        return r;
    }

    // N(q) = N(q + (x)) + t * N(q : x)
    std::vector<Monomial> sum_gens = q.gens();
    {
        std::vector<int> e(n, 0);
        e[pivot_var] = 1;
        sum_gens.emplace_back(std::move(e));
    }
    MonomialIdeal plus = minimalize(n, std::move(sum_gens));

    std::vector<Monomial> colon_gens;
    for (const Monomial& g : q.gens())
        colon_gens.push_back(mono_colon_var(g, pivot_var, 1));
    MonomialIdeal colon = minimalize(n, std::move(colon_gens));

    std::vector<long long> a = series_rec(plus, depth + 1, ctx);
    std::vector<long long> b = series_rec(colon, depth + 1, ctx);
    std::vector<long long> r(std::max(a.size(), b.size() + 1), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i + 1] += b[i];
    poly_trim(r);
    return r;
}

}  // namespace

std::vector<long long> series_numerator(const MonomialIdeal& q,
                                        const EngineLimits& lim) {
    if (q.is_unit()) throw malformed_input("series_numerator: unit ideal");
    SeriesCtx ctx{lim};
    std::vector<long long> r = series_rec(q, 0, ctx);
    poly_trim(r);
    return r;
}

std::vector<long long> expand_series(const std::vector<long long>& numer,
                                     int n, int count) {
    // repeated cumulative sums: one per (1-t) factor
    std::vector<long long> v(static_cast<std::size_t>(std::max(count, 0)), 0);
    for (std::size_t i = 0; i < numer.size() && i < v.size(); ++i)
        v[i] = numer[i];
    for (int pass = 0; pass < n; ++pass)
        for (std::size_t i = 1; i < v.size(); ++i) v[i] += v[i - 1];
    return v;
}

HilbertSamuel::HilbertSamuel(FiltrationSpec f) : spec_(std::move(f)) {
    validate_filtration(spec_);
    memo_ = spec_.initial;
    adic_maximal_ = spec_.regime_a();
}

const MonomialIdeal& HilbertSamuel::chain_ideal(int k) {
    while (static_cast<int>(memo_.size()) <= k) {
        const MonomialIdeal& prev = memo_.back();
        memo_.push_back(ideal_sum(ideal_product(spec_.J, prev), spec_.Q));
    }
    return memo_[static_cast<std::size_t>(k)];
}

long long HilbertSamuel::value(int n) {
    if (n < -1) throw malformed_input("hilbert_samuel: n < -1");
    if (n == -1) return 0;
    if (adic_maximal_) {
        // N_{n+1} = Q + m^{n+1}: cumulative standard-monomial counts
        while (static_cast<int>(cumulative_.size()) <= n) {
            int j = static_cast<int>(cumulative_.size());
            long long prev = j == 0 ? 0 : cumulative_[j - 1];
            cumulative_.push_back(prev + hilbert_function(spec_.Q, j));
        }
        return cumulative_[static_cast<std::size_t>(n)];
    }
    return artinian_length(chain_ideal(n + 1));
}

namespace {

long long binom_i64(long long top, int k) {
    // small exact binomial; top bounded by fit windows
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (top - k + i) / i;
    return r;
}

long long delta_at_front(const std::vector<long long>& w, int k) {
    // k-th forward difference at the first point
    long long s = 0;
    for (int j = 0; j <= k; ++j) {
        long long c = binom_i64(k, j);
        s += ((k - j) % 2 ? -c : c) * w[static_cast<std::size_t>(j)];
    }
    return s;
}

}  // namespace

long long evaluate_fit(const HilbertCoefficients& c, long long n) {
    int D = c.mode == FitMode::local ? c.d : c.d - 1;
    long long v = 0;
    for (int i = 0; i <= D; ++i) {
        long long term = c.e[static_cast<std::size_t>(i)] *
                         binom_i64(n + D - i, D - i);
        v += (i % 2) ? -term : term;
    }
    return v;
}

HilbertCoefficients fit_coefficients(const std::vector<long long>& values,
                                     int d, FitMode mode, int known_n0,
                                     int guard) {
    const int D = mode == FitMode::local ? d : d - 1;
    if (D < 0) throw malformed_input("fit_coefficients: bad dimension");
    const int n_max = static_cast<int>(values.size()) - 1;

    auto try_anchor = [&](int n0) -> std::optional<HilbertCoefficients> {
        if (n0 + D > n_max) return std::nullopt;
        HilbertCoefficients c;
        c.d = d;
        c.mode = mode;
        c.e.assign(static_cast<std::size_t>(D) + 1, 0);
        std::vector<long long> w(values.begin() + n0,
                                 values.begin() + n0 + D + 1);
        for (int i = 0; i <= D; ++i) {
            long long delta = delta_at_front(w, D - i);
            long long ei = (i % 2) ? -delta : delta;
            c.e[static_cast<std::size_t>(i)] = ei;
            for (int t = 0; t <= D; ++t) {
                long long term = ei * binom_i64(n0 + t + D - i, D - i);
                w[static_cast<std::size_t>(t)] -= (i % 2) ? -term : term;
            }
        }
        for (int n = n0; n <= n_max; ++n)
            if (evaluate_fit(c, n) != values[static_cast<std::size_t>(n)])
                return std::nullopt;
        return c;
    };

    std::optional<HilbertCoefficients> fit;
    if (known_n0 >= 0) {
        if (known_n0 + D + guard > n_max)
            throw malformed_input("fit_coefficients: window too short");
        fit = try_anchor(known_n0);
        if (!fit)
            throw resource_limit(
                "fit_coefficients: stabilization not reached at the given anchor");
    } else {
        for (int n0 = 0; n0 + D + guard <= n_max; ++n0) {
            fit = try_anchor(n0);
            if (fit) {
                fit->guard_certified = true;
                break;
            }
        }
        if (!fit)
            throw resource_limit(
                "fit_coefficients: stabilization not reached in the window");
    }

    // least n with exact agreement from n through n_max
    int post = n_max + 1;
    for (int n = n_max; n >= 0; --n) {
        if (evaluate_fit(*fit, n) == values[static_cast<std::size_t>(n)])
            post = n;
        else
            break;
    }
    fit->postulation = post;
    return *fit;
}

std::vector<long long> xi_values(const std::vector<long long>& e) {
    std::vector<long long> xi;
    long long cur = 0;
    for (std::size_t s = 0; s < e.size(); ++s) {
        cur = s == 0 ? e[0] : std::max(cur, std::abs(e[s]));
        xi.push_back(cur);
    }
    return xi;
}

}  // namespace hf
