#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hf/bigint.hpp"
#include "hf/config.hpp"

namespace hf {

/// Inputs for the bound ledger.  xi[s] = max(e_0, |e_1|, ..., |e_s|);
/// delta_prime = max(generating degree, 0); quantities that a regime does
/// not produce stay unset and the dependent entries flag themselves
/// inapplicable.
struct BoundInputs {
    int d = 1;
    int t = 0;
    long long r = 0;
    long long delta_prime = 0;
    std::vector<long long> e;   // e_0..e_d when available
    std::vector<long long> xi;  // xi_0..xi_d
    std::optional<long long> reg;      // reg of the associated graded module
    std::optional<long long> reg1;     // same at cohomological level >= 1
    std::optional<long long> reg_sat;  // reg of the saturated module
    std::optional<long long> h0;
    std::optional<long long> B;
    std::vector<long long> h0_chain;   // h^0(M_i), i = 0..d-1
};

struct TrivediSequence {
    std::vector<BigInt> m;  // m_1..m_d
    BigInt reg1_bound;      // m_d - 1
};

/// The recurrence m_1 = e_0 + delta'; m_i = m_{i-1} +
/// sum_k (-1)^k e_k C(m_{i-1}+i-2-k, i-1-k); reg1 <= m_d - 1.
TrivediSequence trivedi_sequence(const std::vector<long long>& e,
                                 long long delta_prime, int d);

/// (xi_{d-1} + delta' + 1)^{d!} - 2.
BigInt reg1_factorial_bound(long long xi_dm1, long long delta_prime, int d,
                            const EngineLimits& lim = {});

/// (xi_d + r + 1)^{d*d! + 1} - 2, a strict upper bound for reg.
BigInt reg_bound_all_coeffs(long long xi_d, long long r, int d,
                            const EngineLimits& lim = {});

/// (xi_{d-t} + r + 1)^{2(d-t+1)d!} - 2.
BigInt reg_bound_first_coeffs(long long xi_dt, long long r, int d, int t,
                              const EngineLimits& lim = {});

struct NextCoeffBound {
    BigInt strong;  // i = 1: C(e_0, 2); i >= 2: xi*C((xi+r+1)^{i!}+i, i)
    BigInt weak;    // i >= 2: (xi+r+1)^{i*i!+1}
};

/// Upper bounds for (-1)^{i-1} e_i from the preceding coefficients.
NextCoeffBound next_coeff_bound(long long e0_or_xi, long long r, int i,
                                const EngineLimits& lim = {});

struct TailCoeffBound {
    BigInt general;            // (xi_{d-t}+r+1)^{3j(d+1-t)j!}
    BigInt adic;               // (xi_{d-t}+1)^{3j(d-t+1)j!}, the r = 0 case
    std::optional<BigInt> cm;  // (e_0+r+1)^{3j!-j+1} when t = d
};

/// Bounds for |e_j| with d-t+1 <= j <= d; requires t >= 1.
TailCoeffBound tail_coeff_bound(long long xi_dt, long long e0, long long r,
                                int d, int t, int j,
                                const EngineLimits& lim = {});

struct SectionCoeffBound {
    BigInt filtration;  // B(2 reg + 2)^i, strict, 1 <= i <= d
    BigInt graded;      // B(reg1 + 1)^i, 1 <= i <= d-1
};

SectionCoeffBound section_coeff_bound(long long B, long long reg,
                                      long long reg1, int i,
                                      const EngineLimits& lim = {});

/// One named ledger row; inapplicable rows carry the reason instead of a
/// value.
struct LedgerEntry {
    std::string name;
    bool applicable = false;
    std::string reason;  // set when inapplicable
    BigInt value;
};

struct BoundLedger {
    std::vector<LedgerEntry> entries;

    const LedgerEntry* find(const std::string& name) const;
    void add(std::string name, BigInt value);
    void add_inapplicable(std::string name, std::string reason);
};

/// Every bound of the catalog evaluated on one set of inputs.
BoundLedger build_ledger(const BoundInputs& in, const EngineLimits& lim = {});

/// Human-readable rendering: plain digits when short, otherwise
/// "~ 1.7e722 (723 digits)".
std::string format_bound(const BigInt& v);

}  // namespace hf
