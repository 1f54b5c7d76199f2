#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hf/config.hpp"
#include "hf/monomial.hpp"

namespace hf {

/// A good J-filtration of M = R/Q, presented by its initial chain of
/// ideals N_0 = R, N_1, ..., N_r; beyond index r the chain continues by
/// the tail rule N_{k+1} = J*N_k + Q.
struct FiltrationSpec {
    RingSpec ring;
    MonomialIdeal Q;
    MonomialIdeal J;
    std::vector<MonomialIdeal> initial;  // N_0, ..., N_r

    int r() const { return static_cast<int>(initial.size()) - 1; }
    bool adic() const { return r() == 0; }
    /// J = m and adic: the associated graded module is R/Q itself.
    bool regime_a() const;
};

/// Throws malformed_input naming the first failing index / generator when
/// the chain does not define a good J-filtration with minimal r.
void validate_filtration(const FiltrationSpec& f);

/// Images of the filtration in M/H^0_m(M): Q replaced by its saturation,
/// chain entries pushed forward, r trimmed back to minimal.
FiltrationSpec saturated_filtration(const FiltrationSpec& f);

/// Hilbert function of R/q: count of degree-j standard monomials.
long long hilbert_function(const MonomialIdeal& q, int j);

/// Numerator h(t) of the Hilbert series h(t)/(1-t)^n, by pivot recursion
/// (split on a variable shared by two generators; coprime base case).
/// Coefficients indexed by degree.  Requires q proper.
std::vector<long long> series_numerator(const MonomialIdeal& q,
                                        const EngineLimits& lim = {});

/// Expand numer/(1-t)^n: values of the Hilbert function for 0 <= j < count.
std::vector<long long> expand_series(const std::vector<long long>& numer,
                                     int n, int count);

/// Hilbert-Samuel function H(n) = ell(R/N_{n+1}) with memoized tails.
class HilbertSamuel {
public:
    explicit HilbertSamuel(FiltrationSpec f);

    long long value(int n);  // n >= -1; H(-1) = 0
    const MonomialIdeal& chain_ideal(int k);  // N_k, k >= 0
    const FiltrationSpec& spec() const { return spec_; }

private:
    FiltrationSpec spec_;
    std::vector<MonomialIdeal> memo_;
    std::vector<long long> cumulative_;  // regime A fast path
    bool adic_maximal_ = false;
};

enum class FitMode { local, graded };

struct HilbertCoefficients {
    int d = 0;
    FitMode mode = FitMode::local;
    std::vector<long long> e;  // d+1 entries (local) or d entries (graded)
    int postulation = 0;       // least n with exact agreement onward
    bool guard_certified = false;  // stabilization detected, not proved
};

/// Fit the binomial-basis coefficients of the eventual polynomial from the
/// value window.  With known_n0 >= 0 the fit is anchored there and verified
/// on the remaining window (rigorous when n0 bounds the postulation);
/// otherwise the anchor is detected empirically and must survive `guard`
/// further values.  Throws resource_limit when the window never stabilizes.
HilbertCoefficients fit_coefficients(const std::vector<long long>& values,
                                     int d, FitMode mode, int known_n0,
                                     int guard);

/// Evaluate the fitted polynomial at n.
long long evaluate_fit(const HilbertCoefficients& c, long long n);

/// xi[s] = max(e_0, |e_1|, ..., |e_s|).
std::vector<long long> xi_values(const std::vector<long long>& e);

}  // namespace hf
