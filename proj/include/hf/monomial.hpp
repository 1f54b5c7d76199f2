#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hf {

/// Exponent ceiling; breaching it is an explicit error, never wraparound.
inline constexpr int kExponentCap = 1 << 20;

struct RingSpec {
    int n = 1;             // variable count
    std::uint32_t p = 32003;  // prime for the linear-algebra layer
};

/// A monomial as its exponent vector.  Length must match the ring's
/// variable count everywhere it is used.
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps);

    int degree() const;
    int vars() const { return static_cast<int>(e.size()); }
    bool is_one() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Canonical order: degree, then exponent vector lexicographically.
    friend bool operator<(const Monomial& a, const Monomial& b);

    std::string str() const;  // e.g. "x0^2*x1"
};

bool divides(const Monomial& a, const Monomial& b);
Monomial mono_mul(const Monomial& a, const Monomial& b);
Monomial mono_lcm(const Monomial& a, const Monomial& b);
/// a / x_i^k clamped at zero exponents (the colon operation on a generator).
Monomial mono_colon_var(const Monomial& a, int var, int k);

/// Monomial ideal given by its minimal (antichain) generating set, kept
/// sorted canonically.  Empty gens is the zero ideal; {1} is the unit ideal.
class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(int n, std::vector<Monomial> gens_raw);

    static MonomialIdeal zero(int n) { return MonomialIdeal(n, {}); }
    static MonomialIdeal unit(int n);
    static MonomialIdeal maximal(int n);  // (x_0, ..., x_{n-1})

    int vars() const { return n_; }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const;
    bool is_proper() const { return !is_unit(); }

    /// Membership oracle: some generator divides m.
    bool contains(const Monomial& m) const;
    /// Ideal containment: every generator of other lies in *this.
    bool contains(const MonomialIdeal& other) const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

    std::string str() const;

private:
    int n_ = 0;
    std::vector<Monomial> gens_;
};

/// Reduce an arbitrary generating set to the divisibility antichain.
MonomialIdeal minimalize(int n, std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, int k);
MonomialIdeal ideal_intersection(const MonomialIdeal& a, const MonomialIdeal& b);

/// q : x_i^infinity, computed by zeroing the x_i-exponent of every generator.
MonomialIdeal colon_var_saturation(const MonomialIdeal& q, int var);

/// q : m^infinity.  Requires q proper.
MonomialIdeal saturate(const MonomialIdeal& q);

/// Krull dimension of R/q.  Requires q proper.
int krull_dim(const MonomialIdeal& q);

/// True iff q is primary to the maximal ideal.  Requires q proper, nonzero.
bool is_m_primary(const MonomialIdeal& q);

/// Number of standard monomials of q; requires dim R/q == 0.
long long artinian_length(const MonomialIdeal& q);

/// Count of degree-j standard monomials (the Hilbert function of R/q).
long long standard_monomial_count(const MonomialIdeal& q, int degree);

/// Degree-j standard monomials in canonical order.
std::vector<Monomial> standard_monomials(const MonomialIdeal& q, int degree);

/// Rename variables by a permutation (perm[i] = image of variable i).
MonomialIdeal permute_variables(const MonomialIdeal& q,
                                const std::vector<int>& perm);

}  // namespace hf
