#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hf/config.hpp"
#include "hf/graded_module.hpp"
#include "hf/monomial.hpp"

namespace hf {

/// Graded Betti numbers beta_{i,j} = dim Tor_i(E, K)_j, computed as Koszul
/// homology dimensions.
struct BettiTable {
    struct Entry {
        int i;           // homological index
        int j;           // internal degree
        long long rank;  // positive
    };
    std::vector<Entry> entries;  // sorted by (i, j)

    bool empty() const { return entries.empty(); }
    long long get(int i, int j) const;
    int regularity() const;   // max(j - i)
    int proj_dim() const;     // max i
};

struct HomologicalProfile {
    int reg = 0;
    int reg1 = 0;
    int pd = 0;
    int depth = 0;
};

/// A sound a priori stripe ceiling for the Betti table of R/q: the Taylor
/// complex lives below deg lcm(gens), so reg(R/q) <= deg lcm - 1.
int reg_upper_bound_cyclic(const MonomialIdeal& q);

/// Betti numbers of e with stripes j - i <= max_stripe.  Requires
/// e.top >= max_stripe + 1; for a sound max_stripe the table is complete.
BettiTable koszul_betti(const TruncatedGradedModule& e, int max_stripe);

/// Betti table of R/q at its own sound truncation.
BettiTable betti_of_ideal(const MonomialIdeal& q, const RingSpec& ring,
                          const EngineLimits& lim = {});

/// reg/reg1/pd/depth; reg1 is read from the saturated module's table when
/// depth is zero (reg1(E) = reg(E / H^0(E))), and equals reg otherwise.
HomologicalProfile homological_profile(const BettiTable& b,
                                       const BettiTable& b_saturated, int n);

/// True iff multiplication by f has kernel contained in H^0 through degree
/// reg_e + 1 (above reg the kernel must vanish outright).
bool filter_regular_check(const TruncatedGradedModule& e, const LinearForm& f,
                          int reg_e);
bool filter_regular_check(const TruncatedGradedModule& e, const LinearForm& f,
                          int reg_e, const H0Chain& h0);

struct SectionChainReport {
    long long B = 0;
    std::vector<long long> h0_per_level;      // h^0(M_0), ..., h^0(M_{d-1})
    std::vector<std::vector<fp_t>> forms;     // certified form coefficients
    std::uint64_t seed = 0;
    int redraws = 0;                          // failed certifications
};

/// Quotient M_0 = R/q by d certified filter-regular generic linear forms,
/// recording h^0 before each section and the final Artinian length B.
/// Throws certification_failure when no form certifies after the retry
/// budget.
SectionChainReport section_chain(const MonomialIdeal& q, const RingSpec& ring,
                                 int d, int reg_bound, std::uint64_t seed,
                                 const EngineLimits& lim = {});

}  // namespace hf
