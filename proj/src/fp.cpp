#include "hf/fp.hpp"

#include <algorithm>
#include <cassert>

namespace hf {

fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p) {
    std::uint64_t r = 1, b = a % p;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<fp_t>(r);
}

fp_t fp_inv(fp_t a, fp_t p) {
    assert(a % p != 0);
    return fp_pow(a % p, p - 2, p);
}

void SparseMat::sort_normalize(fp_t p) {
    std::sort(entries.begin(), entries.end(),
              [](const SparseEntry& a, const SparseEntry& b) {
                  return a.row != b.row ? a.row < b.row : a.col < b.col;
              });
    std::vector<SparseEntry> out;
    out.reserve(entries.size());
    for (const SparseEntry& e : entries) {
        fp_t v = e.val % p;
        if (!out.empty() && out.back().row == e.row && out.back().col == e.col) {
            out.back().val = fp_add(out.back().val, v, p);
        } else {
            out.push_back({e.row, e.col, v});
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const SparseEntry& e) { return e.val == 0; }),
              out.end());
    entries = std::move(out);
}

bool SparseEliminator::add_row(std::vector<std::pair<int, fp_t>> row) {
    std::vector<std::pair<int, fp_t>> merged;
    while (!row.empty()) {
        int lead = row.front().first;
        fp_t lv = row.front().second;
        int pr = pivot_of_col_[lead];
        if (pr < 0) {
            // new pivot: normalize leading coefficient to 1
            fp_t inv = fp_inv(lv, p_);
            for (auto& [c, v] : row) v = fp_mul(v, inv, p_);
            pivot_of_col_[lead] = static_cast<int>(rows_.size());
            rows_.push_back(std::move(row));
            return true;
        }
        // row -= lv * pivot_row  (pivot row lead is 1)
        const auto& prow = rows_[pr];
        merged.clear();
        merged.reserve(row.size() + prow.size());
        std::size_t i = 0, j = 0;
        while (i < row.size() || j < prow.size()) {
            if (j == prow.size() || (i < row.size() && row[i].first < prow[j].first)) {
                merged.push_back(row[i++]);
            } else if (i == row.size() || prow[j].first < row[i].first) {
                fp_t v = fp_neg(fp_mul(lv, prow[j].second, p_), p_);
                if (v) merged.emplace_back(prow[j].first, v);
                ++j;
            } else {
                fp_t v = fp_sub(row[i].second, fp_mul(lv, prow[j].second, p_), p_);
                if (v) merged.emplace_back(row[i].first, v);
                ++i;
                ++j;
            }
        }
        row.swap(merged);
    }
    return false;
}

RankResult rank_kernel(const SparseMat& m, fp_t p) {
    SparseMat s = m;
    s.sort_normalize(p);
    SparseEliminator elim(m.cols, p);
    std::vector<std::pair<int, fp_t>> row;
    std::size_t i = 0;
    while (i < s.entries.size()) {
        int r = s.entries[i].row;
        row.clear();
        while (i < s.entries.size() && s.entries[i].row == r) {
            row.emplace_back(s.entries[i].col, s.entries[i].val);
            ++i;
        }
        elim.add_row(row);
    }
    RankResult res;
    res.rank = elim.rank();
    res.kernel_dim = m.cols - res.rank;
    return res;
}

DenseMat to_dense(const SparseMat& m) {
    DenseMat d(m.rows, m.cols);
    for (const SparseEntry& e : m.entries) d.at(e.row, e.col) = e.val;
    return d;
}

std::vector<int> rref(DenseMat& m, fp_t p) {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int sel = -1;
        for (int i = r; i < m.rows; ++i) {
            if (m.at(i, c)) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(sel, j), m.at(r, j));
        fp_t inv = fp_inv(m.at(r, c), p);
        for (int j = c; j < m.cols; ++j) m.at(r, j) = fp_mul(m.at(r, j), inv, p);
        for (int i = 0; i < m.rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            fp_t f = m.at(i, c);
            for (int j = c; j < m.cols; ++j)
                m.at(i, j) = fp_sub(m.at(i, j), fp_mul(f, m.at(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<std::vector<fp_t>> kernel_basis(DenseMat m, fp_t p) {
    std::vector<int> pivots = rref(m, p);
    std::vector<bool> is_pivot(m.cols, false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::vector<fp_t>> basis;
    for (int f = 0; f < m.cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<fp_t> v(m.cols, 0);
        v[f] = 1;
        for (std::size_t k = 0; k < pivots.size(); ++k)
            v[pivots[k]] = fp_neg(m.at(static_cast<int>(k), f), p);
        basis.push_back(std::move(v));
    }
    return basis;
}

void rref_reduce(const DenseMat& rref_rows, const std::vector<int>& pivots,
                 std::vector<fp_t>& v, fp_t p) {
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        fp_t coef = v[pivots[k]];
        if (!coef) continue;
        for (int j = 0; j < rref_rows.cols; ++j) {
            fp_t rv = rref_rows.at(static_cast<int>(k), j);
            if (rv) v[j] = fp_sub(v[j], fp_mul(coef, rv, p), p);
        }
    }
}

}  // namespace hf
