#include "hf/monomial.hpp"

#include <algorithm>
#include <functional>

#include "hf/errors.hpp"

namespace hf {

namespace {

void check_exponent(long long v) {
    if (v < 0) throw malformed_input("negative exponent");
    if (v > kExponentCap)
        throw resource_limit("exponent exceeds configured cap (2^20)");
}

}  // namespace

Monomial::Monomial(std::vector<int> exps) : e(std::move(exps)) {
    for (int v : e) check_exponent(v);
}

int Monomial::degree() const {
    long long d = 0;
    for (int v : e) {
        d += v;
        if (d > (1ll << 40)) throw resource_limit("monomial degree overflow");
    }
    return static_cast<int>(d);
}

bool Monomial::is_one() const {
    return std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
}

bool operator<(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e < b.e;
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (e[i] > 1) s += "^" + std::to_string(e[i]);
    }
    return s;
}

bool divides(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw malformed_input("mixed monomial lengths");
    for (std::size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > b.e[i]) return false;
    return true;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw malformed_input("mixed monomial lengths");
    std::vector<int> r(a.e.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        long long v = static_cast<long long>(a.e[i]) + b.e[i];
        check_exponent(v);
        r[i] = static_cast<int>(v);
    }
    return Monomial(std::move(r));
}

Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    if (a.e.size() != b.e.size()) throw malformed_input("mixed monomial lengths");
    std::vector<int> r(a.e.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = std::max(a.e[i], b.e[i]);
    return Monomial(std::move(r));
}

Monomial mono_colon_var(const Monomial& a, int var, int k) {
    std::vector<int> r = a.e;
    r[var] = std::max(0, r[var] - k);
    return Monomial(std::move(r));
}

MonomialIdeal::MonomialIdeal(int n, std::vector<Monomial> gens_raw)
    : n_(n), gens_(std::move(gens_raw)) {
    for (const Monomial& g : gens_)
        if (g.vars() != n_)
            throw malformed_input("generator length does not match variable count");
    std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::unit(int n) {
    return MonomialIdeal(n, {Monomial(std::vector<int>(n, 0))});
}

MonomialIdeal MonomialIdeal::maximal(int n) {
    std::vector<Monomial> g;
    for (int i = 0; i < n; ++i) {
        std::vector<int> e(n, 0);
        e[i] = 1;
        g.emplace_back(std::move(e));
    }
    return MonomialIdeal(n, std::move(g));
}

bool MonomialIdeal::is_unit() const {
    return gens_.size() == 1 && gens_[0].is_one();
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const Monomial& g : gens_)
        if (divides(g, m)) return true;
    return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
    for (const Monomial& g : other.gens_)
        if (!contains(g)) return false;
    return true;
}

std::string MonomialIdeal::str() const {
    if (is_zero()) return "(0)";
    std::string s = "(";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i) s += ", ";
        s += gens_[i].str();
    }
    return s + ")";
}

MonomialIdeal minimalize(int n, std::vector<Monomial> gens) {
    for (const Monomial& g : gens)
        if (g.vars() != n)
            throw malformed_input("minimalize: mixed monomial lengths");
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (const Monomial& g : gens) {
        bool redundant = false;
        for (const Monomial& k : keep) {
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(g);
    }
    return MonomialIdeal(n, std::move(keep));
}

namespace {

int require_same_ring(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.vars() != b.vars())
        throw malformed_input("ideal arithmetic on mismatched variable counts");
    return a.vars();
}

}  // namespace

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
    int n = require_same_ring(a, b);
    std::vector<Monomial> g = a.gens();
    g.insert(g.end(), b.gens().begin(), b.gens().end());
    return minimalize(n, std::move(g));
}

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
    int n = require_same_ring(a, b);
    std::vector<Monomial> g;
    for (const Monomial& x : a.gens())
        for (const Monomial& y : b.gens()) g.push_back(mono_mul(x, y));
    return minimalize(n, std::move(g));
}

MonomialIdeal ideal_power(const MonomialIdeal& a, int k) {
    if (k < 0) throw malformed_input("negative ideal power");
    MonomialIdeal r = MonomialIdeal::unit(a.vars());
    for (int i = 0; i < k; ++i) r = ideal_product(r, a);
    return r;
}

MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b) {
    int n = require_same_ring(a, b);
    std::vector<Monomial> g;
    for (const Monomial& x : a.gens())
        for (const Monomial& y : b.gens()) g.push_back(mono_lcm(x, y));
    return minimalize(n, std::move(g));
}

MonomialIdeal colon_var_saturation(const MonomialIdeal& q, int var) {
    std::vector<Monomial> g;
    for (const Monomial& x : q.gens()) {
        Monomial m = x;
        m.e[var] = 0;
        g.push_back(std::move(m));
    }
    return minimalize(q.vars(), std::move(g));
}

MonomialIdeal saturate(const MonomialIdeal& q) {
    if (q.is_unit()) throw malformed_input("saturate: unit ideal");
    MonomialIdeal cur = q;
    // one sweep of intersect_i (cur : x_i^inf) already lands on the
    // saturation; iterate to a fixpoint anyway and let the loop prove it
    for (;;) {
        if (cur.is_zero()) return cur;
        MonomialIdeal next = colon_var_saturation(cur, 0);
        for (int i = 1; i < cur.vars(); ++i)
            next = ideal_intersection(next, colon_var_saturation(cur, i));
        if (next == cur) return cur;
        cur = next;
    }
}

int krull_dim(const MonomialIdeal& q) {
    if (q.is_unit()) throw malformed_input("krull_dim: unit ideal");
    int n = q.vars();
    if (n > 30) throw resource_limit("krull_dim: too many variables");
    // support masks of the generators
    std::vector<std::uint32_t> supp;
    for (const Monomial& g : q.gens()) {
        std::uint32_t m = 0;
        for (int i = 0; i < n; ++i)
            if (g.e[i] > 0) m |= (1u << i);
        supp.push_back(m);
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (std::uint32_t m : supp) {
            if ((m & ~s) == 0) {  // support contained in s
                ok = false;
                break;
            }
        }
        if (ok) best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

bool is_m_primary(const MonomialIdeal& q) {
    if (q.is_unit() || q.is_zero())
        throw malformed_input("is_m_primary: requires a proper nonzero ideal");
    int n = q.vars();
    for (int i = 0; i < n; ++i) {
        bool has_pure = false;
        for (const Monomial& g : q.gens()) {
            bool pure = g.e[i] > 0;
            for (int j = 0; j < n && pure; ++j)
                if (j != i && g.e[j] > 0) pure = false;
            if (pure) {
                has_pure = true;
                break;
            }
        }
        if (!has_pure) return false;
    }
    return true;
}

namespace {

/// Recursive box walk over exponent vectors, pruning subtrees as soon as the
/// partial monomial already lies in the ideal.
long long count_standard_in_box(const MonomialIdeal& q,
                                const std::vector<int>& box, int var,
                                Monomial& cur) {
    if (var == q.vars()) return q.contains(cur) ? 0 : 1;
    long long total = 0;
    for (int e = 0; e < box[var]; ++e) {
        cur.e[var] = e;
        if (e > 0) {
            // if the partial vector is already in q, all extensions are too
            bool partial_in = false;
            for (const Monomial& g : q.gens()) {
                bool div = true;
                for (int j = 0; j <= var && div; ++j)
                    if (g.e[j] > cur.e[j]) div = false;
                for (int j = var + 1; j < q.vars() && div; ++j)
                    if (g.e[j] > 0) div = false;
                if (div) {
                    partial_in = true;
                    break;
                }
            }
            if (partial_in) break;  // larger e only more divisible
        }
        total += count_standard_in_box(q, box, var + 1, cur);
    }
    cur.e[var] = 0;
    return total;
}

}  // namespace

long long artinian_length(const MonomialIdeal& q) {
    if (q.is_unit()) return 0;
    if (krull_dim(q) != 0)
        throw malformed_input("artinian_length: R/q has positive dimension");
    int n = q.vars();
    std::vector<int> box(n, 0);
    for (int i = 0; i < n; ++i) {
        int best = -1;
        for (const Monomial& g : q.gens()) {
            bool pure = true;
            for (int j = 0; j < n; ++j)
                if (j != i && g.e[j] > 0) pure = false;
            if (pure && g.e[i] > 0)
                best = best < 0 ? g.e[i] : std::min(best, g.e[i]);
        }
        box[i] = best;  // m-primary guarantees best > 0
    }
    Monomial cur(std::vector<int>(n, 0));
    return count_standard_in_box(q, box, 0, cur);
}

namespace {

void walk_degree(const MonomialIdeal& q, int degree, int var, Monomial& cur,
                 const std::function<void(const Monomial&)>& emit) {
    int n = q.vars();
    if (var == n - 1) {
        cur.e[var] = degree;
        if (!q.contains(cur)) emit(cur);
        cur.e[var] = 0;
        return;
    }
    for (int e = 0; e <= degree; ++e) {
        cur.e[var] = e;
        if (e > 0) {
            bool partial_in = false;
            for (const Monomial& g : q.gens()) {
                bool div = true;
                for (int j = 0; j <= var && div; ++j)
                    if (g.e[j] > cur.e[j]) div = false;
                for (int j = var + 1; j < n && div; ++j)
                    if (g.e[j] > 0) div = false;
                if (div) {
                    partial_in = true;
                    break;
                }
            }
            if (partial_in) break;
        }
        walk_degree(q, degree - e, var + 1, cur, emit);
    }
    cur.e[var] = 0;
}

}  // namespace

std::vector<Monomial> standard_monomials(const MonomialIdeal& q, int degree) {
    if (q.is_unit()) return {};
    std::vector<Monomial> out;
    Monomial cur(std::vector<int>(q.vars(), 0));
    if (q.vars() == 0) return out;
    walk_degree(q, degree, 0, cur,
                [&](const Monomial& m) { out.push_back(m); });
    std::sort(out.begin(), out.end());
    return out;
}

long long standard_monomial_count(const MonomialIdeal& q, int degree) {
    if (q.is_unit()) return 0;
    long long count = 0;
    Monomial cur(std::vector<int>(q.vars(), 0));
    walk_degree(q, degree, 0, cur, [&](const Monomial&) { ++count; });
    return count;
}

MonomialIdeal permute_variables(const MonomialIdeal& q,
                                const std::vector<int>& perm) {
    std::vector<Monomial> g;
    for (const Monomial& m : q.gens()) {
        std::vector<int> e(m.e.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[perm[i]] = m.e[i];
        g.emplace_back(std::move(e));
    }
    return minimalize(q.vars(), std::move(g));
}

}  // namespace hf
