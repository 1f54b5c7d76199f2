#include <vector>

#include "doctest.h"

#include "hf/fp.hpp"
#include "hf/rng.hpp"

using namespace hf;

namespace {

/// independent dense elimination oracle (plain full-pivot row reduction)
int dense_rank_oracle(std::vector<std::vector<fp_t>> a, fp_t p) {
    int rows = static_cast<int>(a.size());
    int cols = rows ? static_cast<int>(a[0].size()) : 0;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int sel = -1;
        for (int r = rank; r < rows; ++r)
            if (a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) {
                sel = r;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[static_cast<std::size_t>(sel)], a[static_cast<std::size_t>(rank)]);
        fp_t inv = fp_inv(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(c)], p);
        for (int j = 0; j < cols; ++j)
            a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)] =
                fp_mul(a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], inv, p);
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            fp_t f = a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
            if (!f) continue;
            for (int j = 0; j < cols; ++j)
                a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)] = fp_sub(
                    a[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)],
                    fp_mul(f, a[static_cast<std::size_t>(rank)][static_cast<std::size_t>(j)], p), p);
        }
        ++rank;
    }
    return rank;
}

}  // namespace

TEST_CASE("field helpers") {
    const fp_t p = 32003;
    SplitMix64 rng(3);
    for (int i = 0; i < 500; ++i) {
        fp_t a = 1 + static_cast<fp_t>(rng.below(p - 1));
        CHECK(fp_mul(a, fp_inv(a, p), p) == 1);
    }
    CHECK(fp_add(p - 1, 1, p) == 0);
    CHECK(fp_sub(0, 1, p) == p - 1);
}

TEST_CASE("rank_kernel on the catalog examples") {
    const fp_t p = 32003;
    SparseMat id3{3, 3, {{0, 0, 1}, {1, 1, 1}, {2, 2, 1}}};
    RankResult r = rank_kernel(id3, p);
    CHECK(r.rank == 3);
    CHECK(r.kernel_dim == 0);

    SparseMat zero{2, 5, {}};
    r = rank_kernel(zero, p);
    CHECK(r.rank == 0);
    CHECK(r.kernel_dim == 5);

    // [[1,2],[2,4]] has rank 1 mod 32003
    SparseMat m{2, 2, {{0, 0, 1}, {0, 1, 2}, {1, 0, 2}, {1, 1, 4}}};
    r = rank_kernel(m, p);
    CHECK(r.rank == 1);
    CHECK(r.kernel_dim == 1);
}

TEST_CASE("rank_kernel matches a dense oracle on 500 random matrices") {
    const fp_t p = 32003;
    SplitMix64 rng(99);
    for (int rep = 0; rep < 500; ++rep) {
        int rows = 1 + static_cast<int>(rng.below(20));
        int cols = 1 + static_cast<int>(rng.below(20));
        std::vector<std::vector<fp_t>> dense(
            static_cast<std::size_t>(rows),
            std::vector<fp_t>(static_cast<std::size_t>(cols), 0));
        SparseMat sparse{rows, cols, {}};
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.below(3) == 0) {
                    fp_t v = 1 + static_cast<fp_t>(rng.below(p - 1));
                    dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
                    sparse.entries.push_back({r, c, v});
                }
        RankResult rr = rank_kernel(sparse, p);
        int oracle = dense_rank_oracle(dense, p);
        CHECK(rr.rank == oracle);
        CHECK(rr.kernel_dim == cols - oracle);
    }
}

TEST_CASE("rref produces normalized pivot rows and kernel_basis solves") {
    const fp_t p = 32003;
    SplitMix64 rng(123);
    for (int rep = 0; rep < 100; ++rep) {
        int rows = 1 + static_cast<int>(rng.below(8));
        int cols = 1 + static_cast<int>(rng.below(8));
        DenseMat m(rows, cols);
        for (int r = 0; r < rows; ++r)
            for (int c = 0; c < cols; ++c)
                if (rng.below(2) == 0)
                    m.at(r, c) = 1 + static_cast<fp_t>(rng.below(p - 1));
        DenseMat orig = m;
        std::vector<std::vector<fp_t>> kern = kernel_basis(m, p);
        for (const std::vector<fp_t>& v : kern) {
            for (int r = 0; r < rows; ++r) {
                std::uint64_t acc = 0;
                for (int c = 0; c < cols; ++c)
                    acc += static_cast<std::uint64_t>(orig.at(r, c)) *
                           v[static_cast<std::size_t>(c)] % p;
                CHECK(acc % p == 0);
            }
        }
        DenseMat again = orig;
        std::vector<int> piv = rref(again, p);
        CHECK(static_cast<int>(piv.size() + kern.size()) == cols);
    }
}
