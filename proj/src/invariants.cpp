#include "hf/invariants.hpp"

#include <algorithm>

#include "hf/errors.hpp"
#include "hf/rng.hpp"

namespace hf {

long long BettiTable::get(int i, int j) const {
    for (const Entry& e : entries)
        if (e.i == i && e.j == j) return e.rank;
    return 0;
}

int BettiTable::regularity() const {
    int r = 0;
    for (const Entry& e : entries) r = std::max(r, e.j - e.i);
    return r;
}

int BettiTable::proj_dim() const {
    int r = 0;
    for (const Entry& e : entries) r = std::max(r, e.i);
    return r;
}

int reg_upper_bound_cyclic(const MonomialIdeal& q) {
    if (q.is_zero()) return 0;
    std::vector<int> cap(q.vars(), 0);
    for (const Monomial& g : q.gens())
        for (int i = 0; i < q.vars(); ++i) cap[i] = std::max(cap[i], g.e[i]);
    long long deg = 0;
    for (int v : cap) deg += v;
    return static_cast<int>(std::max(0ll, deg - 1));
}

namespace {

std::vector<std::uint32_t> subsets_of_size(int n, int k) {
    std::vector<std::uint32_t> out;
    if (k < 0 || k > n) return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        std::uint32_t m = 0;
        for (int i : idx) m |= (1u << i);
        out.push_back(m);
        int pos = k - 1;
        while (pos >= 0 && idx[pos] == n - k + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (int i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return out;
}

}  // namespace

BettiTable koszul_betti(const TruncatedGradedModule& e, int max_stripe) {
    const int n = e.ring.n;
    const fp_t p = e.ring.p;
    if (n > 16)
        throw resource_limit("koszul_betti: variable count exceeds ceiling");
    if (e.top < max_stripe + 1)
        throw malformed_input("koszul_betti: truncation below stripe bound + 1");

    // subset bookkeeping per exterior degree
    std::vector<std::vector<std::uint32_t>> subsets(n + 1);
    std::vector<std::vector<int>> subset_index(n + 1,
                                               std::vector<int>(1u << n, -1));
    for (int i = 0; i <= n; ++i) {
        subsets[i] = subsets_of_size(n, i);
        for (std::size_t k = 0; k < subsets[i].size(); ++k)
            subset_index[i][subsets[i][k]] = static_cast<int>(k);
    }

    // rank_bd[i][q]: rank of the boundary Lambda^i (x) E_q -> Lambda^{i-1} (x) E_{q+1}
    std::vector<std::vector<long long>> rank_bd(
        n + 2, std::vector<long long>(max_stripe + 1, 0));

    int stop = max_stripe;  // last stripe with possibly nonzero homology
    for (int q = 0; q <= max_stripe; ++q) {
        if (e.dim_at(q) == 0) {
            stop = q - 1;
            break;
        }
        int dq = e.dim_at(q);
        int dq1 = e.dim_at(q + 1);
        // adjacency of each mult map, indexed by target basis vector
        std::vector<std::vector<std::vector<std::pair<int, fp_t>>>> radj(n);
        for (int v = 0; v < n; ++v) {
            radj[v].assign(dq1, {});
            for (const SparseEntry& ent : e.mult[v][q].entries)
                radj[v][ent.row].emplace_back(ent.col, ent.val);
        }
        for (int i = 1; i <= n; ++i) {
            long long cols = static_cast<long long>(subsets[i].size()) * dq;
            if (cols == 0 || dq1 == 0) continue;
            SparseEliminator elim(static_cast<int>(cols), p);
            std::vector<std::pair<int, fp_t>> row;
            for (std::uint32_t tmask : subsets[i - 1]) {
                for (int w = 0; w < dq1; ++w) {
                    row.clear();
                    for (int k = 0; k < n; ++k) {
                        if (tmask & (1u << k)) continue;
                        std::uint32_t smask = tmask | (1u << k);
                        int sidx = subset_index[i][smask];
                        bool neg = __builtin_popcount(smask & ((1u << k) - 1)) & 1;
                        for (auto [v, val] : radj[k][w]) {
                            fp_t x = neg ? fp_neg(val, p) : val;
                            row.emplace_back(sidx * dq + v, x);
                        }
                    }
                    if (row.empty()) continue;
                    std::sort(row.begin(), row.end());
                    elim.add_row(row);
                }
            }
            rank_bd[i][q] = elim.rank();
        }
    }

    BettiTable table;
    for (int q = 0; q <= stop; ++q) {
        for (int i = 0; i <= n; ++i) {
            long long space =
                static_cast<long long>(subsets[i].size()) * e.dim_at(q);
            long long incoming = q > 0 ? rank_bd[i + 1][q - 1] : 0;
            long long beta = space - rank_bd[i][q] - incoming;
            if (beta < 0)
                throw error("koszul_betti: negative homology dimension (" +
                            std::to_string(i) + "," + std::to_string(i + q) +
                            "), boundary maps are inconsistent");
            if (beta > 0) table.entries.push_back({i, i + q, beta});
        }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const BettiTable::Entry& a, const BettiTable::Entry& b) {
                  return a.i != b.i ? a.i < b.i : a.j < b.j;
              });
    return table;
}

BettiTable betti_of_ideal(const MonomialIdeal& q, const RingSpec& ring,
                          const EngineLimits& lim) {
    int cap = reg_upper_bound_cyclic(q);
    if (cap + 1 > lim.max_truncation)
        throw resource_limit("betti_of_ideal: truncation ceiling exceeded (need " +
                             std::to_string(cap + 1) + ")");
    TruncatedGradedModule e = cyclic_module(q, cap + 1, ring);
    return koszul_betti(e, cap);
}

HomologicalProfile homological_profile(const BettiTable& b,
                                       const BettiTable& b_saturated, int n) {
    if (b.empty()) throw malformed_input("homological_profile: empty table");
    HomologicalProfile prof;
    prof.reg = b.regularity();
    prof.pd = b.proj_dim();
    prof.depth = n - prof.pd;
    prof.reg1 = prof.depth >= 1 ? prof.reg : b_saturated.regularity();
    return prof;
}

bool filter_regular_check(const TruncatedGradedModule& e, const LinearForm& f,
                          int reg_e) {
    return filter_regular_check(e, f, reg_e, h0_chain(e, reg_e));
}

bool filter_regular_check(const TruncatedGradedModule& e, const LinearForm& f,
                          int reg_e, const H0Chain& h0) {
    if (e.top < reg_e + 2)
        throw malformed_input("filter_regular_check: truncation too low");
    fp_t p = e.ring.p;
    for (int j = 0; j <= reg_e + 1; ++j) {
        DenseMat phi = linear_form_map(e, f, j);
        for (std::vector<fp_t>& v : kernel_basis(std::move(phi), p))
            if (!h0.member(j, std::move(v), p)) return false;
    }
    return true;
}

SectionChainReport section_chain(const MonomialIdeal& q, const RingSpec& ring,
                                 int d, int reg_bound, std::uint64_t seed,
                                 const EngineLimits& lim) {
    SectionChainReport rep;
    rep.seed = seed;
    SplitMix64 rng(seed);

    TruncatedGradedModule cur = cyclic_module(q, reg_bound + d + 2, ring);
    for (int level = 0; level < d; ++level) {
        H0Chain h0 = h0_chain(cur, reg_bound);
        rep.h0_per_level.push_back(h0.total());

        LinearForm f;
        bool ok = false;
        for (int attempt = 0; attempt < lim.max_form_retries; ++attempt) {
            f.coeffs.clear();
            bool nonzero = false;
            for (int v = 0; v < ring.n; ++v) {
                fp_t c = static_cast<fp_t>(rng.below(ring.p));
                f.coeffs.push_back(c);
                nonzero = nonzero || c != 0;
            }
            if (!nonzero) continue;
            if (filter_regular_check(cur, f, reg_bound, h0)) {
                ok = true;
                break;
            }
            ++rep.redraws;
        }
        if (!ok)
            throw certification_failure(
                "section_chain: no filter-regular form after " +
                std::to_string(lim.max_form_retries) + " draws (seed " +
                std::to_string(seed) + ", level " + std::to_string(level) + ")");
        rep.forms.push_back(f.coeffs);
        cur = quotient_by_linear_form(cur, f);
    }

    // the final module is Artinian and must fit inside the truncation
    for (int j = reg_bound + 1; j <= cur.top; ++j) {
        if (cur.dim_at(j) != 0)
            throw certification_failure(
                "section_chain: final module does not vanish above the reg bound");
    }
    rep.B = cur.total_dim();
    return rep;
}

}  // namespace hf
