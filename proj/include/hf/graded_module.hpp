#pragma once

#include <string>
#include <vector>

#include "hf/fp.hpp"
#include "hf/monomial.hpp"

namespace hf {

/// Degree-one form sum_i coeffs[i] * x_i, coefficients mod p, not all zero.
struct LinearForm {
    std::vector<fp_t> coeffs;
};

/// A graded module known up to degree `top`: a basis dimension per degree
/// plus the variable multiplication maps between consecutive degrees.
struct TruncatedGradedModule {
    RingSpec ring;
    int top = 0;
    std::vector<int> dims;                      // dims[j], 0 <= j <= top
    std::vector<std::vector<SparseMat>> mult;   // mult[var][j]: deg j -> j+1
    std::string provenance;

    int dim_at(int j) const {
        return (j < 0 || j > top) ? 0 : dims[static_cast<std::size_t>(j)];
    }
    long long total_dim() const;
};

/// R/q with standard-monomial bases through degree T.
TruncatedGradedModule cyclic_module(const MonomialIdeal& q, int T,
                                    const RingSpec& ring);

/// The multiplication-by-f map E_{j-1} -> E_j as a dense matrix.
DenseMat linear_form_map(const TruncatedGradedModule& e, const LinearForm& f,
                         int from_degree);

/// E / fE, truncated one degree lower.  Cokernel bases are the
/// lexicographically-first standard coordinates missed by the image.
TruncatedGradedModule quotient_by_linear_form(const TruncatedGradedModule& e,
                                              const LinearForm& f);

/// The graded pieces of H^0_m(E) for degrees 0..reg_hint, kept as reduced
/// echelon bases so callers can test membership.  reg_hint must be an upper
/// bound for reg(E); H^0 vanishes above it.
struct H0Chain {
    int reg_hint = 0;
    std::vector<DenseMat> basis;             // RREF rows per degree
    std::vector<std::vector<int>> pivots;    // pivot columns per degree
    std::vector<int> dims;                   // dim H^0_j, j = 0..reg_hint

    long long total() const;
    /// Is v (a coordinate vector in degree j) inside H^0_j?
    bool member(int j, std::vector<fp_t> v, fp_t p) const;
};

H0Chain h0_chain(const TruncatedGradedModule& e, int reg_hint);

/// dim H^0_j for 0 <= j <= reg_hint; the sum is h^0.
std::vector<int> h0_graded(const TruncatedGradedModule& e, int reg_hint);

}  // namespace hf
