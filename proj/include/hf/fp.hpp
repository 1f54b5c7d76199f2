#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hf {

using fp_t = std::uint32_t;

inline fp_t fp_add(fp_t a, fp_t b, fp_t p) {
    fp_t s = a + b;
    return s >= p ? s - p : s;
}
inline fp_t fp_sub(fp_t a, fp_t b, fp_t p) { return a >= b ? a - b : a + p - b; }
inline fp_t fp_neg(fp_t a, fp_t p) { return a == 0 ? 0 : p - a; }
inline fp_t fp_mul(fp_t a, fp_t b, fp_t p) {
    return static_cast<fp_t>((static_cast<std::uint64_t>(a) * b) % p);
}
fp_t fp_pow(fp_t a, std::uint64_t e, fp_t p);
fp_t fp_inv(fp_t a, fp_t p);

struct SparseEntry {
    int row;
    int col;
    fp_t val;
};

/// Sparse matrix over GF(p): entry list sorted by (row, col), values in
/// [1, p-1], no duplicate coordinates.
struct SparseMat {
    int rows = 0;
    int cols = 0;
    std::vector<SparseEntry> entries;

    void sort_normalize(fp_t p);  // sort, merge duplicates mod p, drop zeros
    std::size_t nnz() const { return entries.size(); }
};

struct RankResult {
    int rank = 0;
    int kernel_dim = 0;  // cols - rank
};

/// Incremental sparse row-echelon eliminator.  Rows are reduced against the
/// pivots found so far; surviving rows become new pivots (lead normalized
/// to 1).  Only forward reduction, so old pivot rows never fill in.
class SparseEliminator {
public:
    SparseEliminator(int cols, fp_t p) : p_(p), pivot_of_col_(cols, -1) {}

    /// row: (col, val) pairs sorted by col.  Returns true when the row was
    /// independent of everything seen so far.
    bool add_row(std::vector<std::pair<int, fp_t>> row);

    int rank() const { return static_cast<int>(rows_.size()); }

private:
    fp_t p_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<std::pair<int, fp_t>>> rows_;
};

/// Exact rank and kernel dimension over GF(p).
RankResult rank_kernel(const SparseMat& m, fp_t p);

/// Row-major dense matrix for the small per-degree computations.
struct DenseMat {
    int rows = 0;
    int cols = 0;
    std::vector<fp_t> a;

    DenseMat() = default;
    DenseMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    fp_t& at(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    fp_t at(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }
};

DenseMat to_dense(const SparseMat& m);

/// In-place reduced row echelon form; returns the pivot columns in order.
std::vector<int> rref(DenseMat& m, fp_t p);

/// Basis of the right kernel {v : m v = 0}, one dense vector per basis
/// element, deterministic (free columns in increasing order).
std::vector<std::vector<fp_t>> kernel_basis(DenseMat m, fp_t p);

/// Reduce v against normalized RREF rows; afterwards v has zeros at all
/// pivot coordinates.  v is a coordinate vector of length m.cols.
void rref_reduce(const DenseMat& rref_rows, const std::vector<int>& pivots,
                 std::vector<fp_t>& v, fp_t p);

}  // namespace hf
