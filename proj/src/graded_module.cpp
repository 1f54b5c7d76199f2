#include "hf/graded_module.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf {

long long TruncatedGradedModule::total_dim() const {
    long long t = 0;
    for (int d : dims) t += d;
    return t;
}

namespace {

int basis_index(const std::vector<Monomial>& basis, const Monomial& m) {
    auto it = std::lower_bound(basis.begin(), basis.end(), m);
    if (it == basis.end() || !(*it == m)) return -1;
    return static_cast<int>(it - basis.begin());
}

}  // namespace

TruncatedGradedModule cyclic_module(const MonomialIdeal& q, int T,
                                    const RingSpec& ring) {
    if (q.is_unit()) throw malformed_input("cyclic_module: unit ideal");
    if (q.vars() != ring.n)
        throw malformed_input("cyclic_module: ring/ideal variable mismatch");
    if (T < 0) throw malformed_input("cyclic_module: negative truncation");

    TruncatedGradedModule e;
    e.ring = ring;
    e.top = T;
    e.provenance = "cyclic" + q.str();

    std::vector<std::vector<Monomial>> bases(T + 1);
    for (int j = 0; j <= T; ++j) {
        bases[j] = standard_monomials(q, j);
        e.dims.push_back(static_cast<int>(bases[j].size()));
    }
    e.mult.assign(ring.n, std::vector<SparseMat>(std::max(T, 0)));
    for (int v = 0; v < ring.n; ++v) {
        for (int j = 0; j < T; ++j) {
            SparseMat m;
            m.rows = e.dims[j + 1];
            m.cols = e.dims[j];
            for (int c = 0; c < e.dims[j]; ++c) {
                Monomial prod = bases[j][c];
                prod.e[v] += 1;
                int r = basis_index(bases[j + 1], prod);
                if (r >= 0) m.entries.push_back({r, c, 1});
            }
            e.mult[v][j] = std::move(m);
        }
    }
    return e;
}

DenseMat linear_form_map(const TruncatedGradedModule& e, const LinearForm& f,
                         int from_degree) {
    int j = from_degree;
    DenseMat m(e.dim_at(j + 1), e.dim_at(j));
    if (j < 0 || j >= e.top) return m;
    fp_t p = e.ring.p;
    for (int v = 0; v < e.ring.n; ++v) {
        fp_t c = f.coeffs[v] % p;
        if (!c) continue;
        for (const SparseEntry& ent : e.mult[v][j].entries)
            m.at(ent.row, ent.col) =
                fp_add(m.at(ent.row, ent.col), fp_mul(c, ent.val, p), p);
    }
    return m;
}

TruncatedGradedModule quotient_by_linear_form(const TruncatedGradedModule& e,
                                              const LinearForm& f) {
    if (e.top < 1)
        throw malformed_input("quotient_by_linear_form: truncation too low");
    fp_t p = e.ring.p;
    int new_top = e.top - 1;

    // image of f-multiplication per degree, as RREF rows
    std::vector<DenseMat> img(new_top + 2);
    std::vector<std::vector<int>> img_piv(new_top + 2);
    std::vector<std::vector<int>> keep(new_top + 2);  // surviving coordinates
    for (int j = 0; j <= new_top + 1 && j <= e.top; ++j) {
        DenseMat a = linear_form_map(e, f, j - 1);
        // rows of the transpose span the image
        DenseMat t(a.cols, a.rows);
        for (int r = 0; r < a.rows; ++r)
            for (int c = 0; c < a.cols; ++c) t.at(c, r) = a.at(r, c);
        img_piv[j] = rref(t, p);
        t.rows = static_cast<int>(img_piv[j].size());
        t.a.resize(static_cast<std::size_t>(t.rows) * t.cols);
        img[j] = std::move(t);
        std::vector<bool> is_piv(e.dim_at(j), false);
        for (int c : img_piv[j]) is_piv[c] = true;
        for (int c = 0; c < e.dim_at(j); ++c)
            if (!is_piv[c]) keep[j].push_back(c);
    }

    TruncatedGradedModule out;
    out.ring = e.ring;
    out.top = new_top;
    out.provenance = e.provenance + ";quot";
    for (int j = 0; j <= new_top; ++j)
        out.dims.push_back(static_cast<int>(keep[j].size()));

    out.mult.assign(e.ring.n, std::vector<SparseMat>(std::max(new_top, 0)));
    for (int v = 0; v < e.ring.n; ++v) {
        for (int j = 0; j < new_top; ++j) {
            SparseMat m;
            m.rows = out.dims[j + 1];
            m.cols = out.dims[j];
            // position of each surviving coordinate in degree j+1
            std::vector<int> pos(e.dim_at(j + 1), -1);
            for (std::size_t k = 0; k < keep[j + 1].size(); ++k)
                pos[keep[j + 1][k]] = static_cast<int>(k);
            DenseMat mv = to_dense(e.mult[v][j]);
            for (std::size_t cidx = 0; cidx < keep[j].size(); ++cidx) {
                std::vector<fp_t> w(e.dim_at(j + 1), 0);
                int src = keep[j][cidx];
                for (int r = 0; r < mv.rows; ++r) w[r] = mv.at(r, src);
                rref_reduce(img[j + 1], img_piv[j + 1], w, p);
                for (int r = 0; r < e.dim_at(j + 1); ++r) {
                    if (!w[r]) continue;
                    m.entries.push_back({pos[r], static_cast<int>(cidx), w[r]});
                }
            }
            m.sort_normalize(p);
            out.mult[v][j] = std::move(m);
        }
    }
    return out;
}

H0Chain h0_chain(const TruncatedGradedModule& e, int reg_hint) {
    if (e.top < reg_hint + 1)
        throw malformed_input("h0_chain: truncation below reg bound + 1");
    fp_t p = e.ring.p;
    H0Chain chain;
    chain.reg_hint = reg_hint;
    chain.basis.resize(reg_hint + 1);
    chain.pivots.resize(reg_hint + 1);
    chain.dims.assign(reg_hint + 1, 0);

    // descend: S_{reg_hint+1} = 0; S_j = { v : x_i v in S_{j+1} for all i }
    DenseMat above;        // RREF rows of S_{j+1}
    std::vector<int> above_piv;
    int above_cols = e.dim_at(reg_hint + 1);
    for (int j = reg_hint; j >= 0; --j) {
        int dj = e.dim_at(j);
        int dj1 = e.dim_at(j + 1);
        (void)above_cols;
        // stacked condition matrix: reduce(mult_i v) == 0 for every i
        DenseMat cond(e.ring.n * dj1, dj);
        for (int v = 0; v < e.ring.n; ++v) {
            DenseMat mv = to_dense(e.mult[v][j]);
            for (int c = 0; c < dj; ++c) {
                std::vector<fp_t> w(dj1, 0);
                for (int r = 0; r < dj1; ++r) w[r] = mv.at(r, c);
                rref_reduce(above, above_piv, w, p);
                for (int r = 0; r < dj1; ++r) cond.at(v * dj1 + r, c) = w[r];
            }
        }
        std::vector<std::vector<fp_t>> kern = kernel_basis(cond, p);
        DenseMat rows(static_cast<int>(kern.size()), dj);
        for (std::size_t k = 0; k < kern.size(); ++k)
            for (int c = 0; c < dj; ++c) rows.at(static_cast<int>(k), c) = kern[k][c];
        std::vector<int> piv = rref(rows, p);
        rows.rows = static_cast<int>(piv.size());
        rows.a.resize(static_cast<std::size_t>(rows.rows) * rows.cols);
        chain.dims[j] = rows.rows;
        chain.basis[j] = rows;
        chain.pivots[j] = piv;
        above = std::move(rows);
        above_piv = chain.pivots[j];
    }
    return chain;
}

long long H0Chain::total() const {
    long long t = 0;
    for (int d : dims) t += d;
    return t;
}

bool H0Chain::member(int j, std::vector<fp_t> v, fp_t p) const {
    if (j > reg_hint) {
        // H^0 vanishes above the bound
        for (fp_t x : v)
            if (x) return false;
        return true;
    }
    rref_reduce(basis[j], pivots[j], v, p);
    for (fp_t x : v)
        if (x) return false;
    return true;
}

std::vector<int> h0_graded(const TruncatedGradedModule& e, int reg_hint) {
    return h0_chain(e, reg_hint).dims;
}

}  // namespace hf
