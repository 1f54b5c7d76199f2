#include "hf/bounds.hpp"

#include <algorithm>

#include "hf/errors.hpp"

namespace hf {

namespace {

unsigned long long checked_exponent(unsigned long long a, unsigned long long b) {
    if (a != 0 && b > ~0ull / a)
        throw resource_limit("bound exponent overflows 64 bits");
    return a * b;
}

BigInt power_minus(long long base, unsigned long long exp, long long sub,
                   const EngineLimits& lim) {
    return BigInt::pow(BigInt(base), exp, lim.bigint_bits) - BigInt(sub);
}

}  // namespace

TrivediSequence trivedi_sequence(const std::vector<long long>& e,
                                 long long delta_prime, int d) {
    if (d < 1) throw malformed_input("trivedi_sequence: d >= 1 required");
    if (static_cast<int>(e.size()) < d)
        throw malformed_input("trivedi_sequence: needs e_0..e_{d-1}");
    TrivediSequence seq;
    BigInt m = BigInt(e[0]) + BigInt(delta_prime);
    seq.m.push_back(m);
    for (int i = 2; i <= d; ++i) {
        BigInt next = m;
        for (int k = 0; k <= i - 1; ++k) {
            BigInt term = BigInt(e[static_cast<std::size_t>(k)]) *
                          BigInt::binomial(m + BigInt(i - 2 - k),
                                           static_cast<unsigned>(i - 1 - k));
            if (k % 2)
                next -= term;
            else
                next += term;
        }
        m = next;
        seq.m.push_back(m);
    }
    seq.reg1_bound = seq.m.back() - BigInt(1);
    return seq;
}

BigInt reg1_factorial_bound(long long xi_dm1, long long delta_prime, int d,
                            const EngineLimits& lim) {
    if (d < 1) throw malformed_input("reg1_factorial_bound: d >= 1 required");
    unsigned long long fact = BigInt::factorial_u64(static_cast<unsigned>(d));
    return power_minus(xi_dm1 + delta_prime + 1, fact, 2, lim);
}

BigInt reg_bound_all_coeffs(long long xi_d, long long r, int d,
                            const EngineLimits& lim) {
    if (d < 1) throw malformed_input("reg_bound_all_coeffs: d >= 1 required");
    unsigned long long fact = BigInt::factorial_u64(static_cast<unsigned>(d));
    unsigned long long exp =
        checked_exponent(static_cast<unsigned long long>(d), fact) + 1;
    return power_minus(xi_d + r + 1, exp, 2, lim);
}

BigInt reg_bound_first_coeffs(long long xi_dt, long long r, int d, int t,
                              const EngineLimits& lim) {
    if (d < 1 || t < 0 || t > d)
        throw malformed_input("reg_bound_first_coeffs: need d >= 1, 0 <= t <= d");
    unsigned long long fact = BigInt::factorial_u64(static_cast<unsigned>(d));
    unsigned long long exp = checked_exponent(
        2ull * static_cast<unsigned long long>(d - t + 1), fact);
    return power_minus(xi_dt + r + 1, exp, 2, lim);
}

NextCoeffBound next_coeff_bound(long long e0_or_xi, long long r, int i,
                                const EngineLimits& lim) {
    if (i < 1) throw malformed_input("next_coeff_bound: i >= 1 required");
    NextCoeffBound out;
    if (i == 1) {
        out.strong = BigInt::binomial(BigInt(e0_or_xi), 2);
        out.weak = out.strong;
        return out;
    }
    unsigned long long fact = BigInt::factorial_u64(static_cast<unsigned>(i));
    BigInt base = BigInt::pow(BigInt(e0_or_xi + r + 1), fact, lim.bigint_bits);
    out.strong = BigInt(e0_or_xi) *
                 BigInt::binomial(base + BigInt(i), static_cast<unsigned>(i));
    unsigned long long exp =
        checked_exponent(static_cast<unsigned long long>(i), fact) + 1;
    out.weak = BigInt::pow(BigInt(e0_or_xi + r + 1), exp, lim.bigint_bits);
    return out;
}

TailCoeffBound tail_coeff_bound(long long xi_dt, long long e0, long long r,
                                int d, int t, int j, const EngineLimits& lim) {
    if (t < 1) throw malformed_input("tail_coeff_bound: requires t >= 1");
    if (j < d - t + 1 || j > d)
        throw malformed_input("tail_coeff_bound: j out of range");
    TailCoeffBound out;
    unsigned long long jfact = BigInt::factorial_u64(static_cast<unsigned>(j));
    unsigned long long exp = checked_exponent(
        checked_exponent(3ull * static_cast<unsigned long long>(j),
                         static_cast<unsigned long long>(d + 1 - t)),
        jfact);
    out.general = BigInt::pow(BigInt(xi_dt + r + 1), exp, lim.bigint_bits);
    out.adic = BigInt::pow(BigInt(xi_dt + 1), exp, lim.bigint_bits);
    if (t == d) {
        unsigned long long cm_exp = 3ull * jfact - static_cast<unsigned>(j) + 1;
        out.cm = BigInt::pow(BigInt(e0 + r + 1), cm_exp, lim.bigint_bits);
    }
    return out;
}

SectionCoeffBound section_coeff_bound(long long B, long long reg,
                                      long long reg1, int i,
                                      const EngineLimits& lim) {
    if (B < 1 || reg < 0 || i < 1)
        throw malformed_input("section_coeff_bound: bad inputs");
    SectionCoeffBound out;
    out.filtration = BigInt(B) * BigInt::pow(BigInt(2 * reg + 2),
                                             static_cast<unsigned>(i),
                                             lim.bigint_bits);
    out.graded = BigInt(B) * BigInt::pow(BigInt(reg1 + 1),
                                         static_cast<unsigned>(i),
                                         lim.bigint_bits);
    return out;
}

const LedgerEntry* BoundLedger::find(const std::string& name) const {
    for (const LedgerEntry& e : entries)
        if (e.name == name) return &e;
    return nullptr;
}

void BoundLedger::add(std::string name, BigInt value) {
    entries.push_back({std::move(name), true, "", std::move(value)});
}

void BoundLedger::add_inapplicable(std::string name, std::string reason) {
    entries.push_back({std::move(name), false, std::move(reason), BigInt()});
}

BoundLedger build_ledger(const BoundInputs& in, const EngineLimits& lim) {
    BoundLedger led;
    const int d = in.d, t = in.t;
    if (d < 1 || t < 0 || t > d)
        throw malformed_input("build_ledger: need d >= 1, 0 <= t <= d");
    if (static_cast<int>(in.xi.size()) < d + 1)
        throw malformed_input("build_ledger: xi_0..xi_d required");
    const bool have_graded_e = static_cast<int>(in.e.size()) >= d;
    const long long e0 = in.e.empty() ? in.xi[0] : in.e[0];  // xi_0 = e_0

    if (have_graded_e) {
        led.add("trivedi_reg1_bound",
                trivedi_sequence(in.e, in.delta_prime, d).reg1_bound);
    } else {
        led.add_inapplicable("trivedi_reg1_bound", "needs e_0..e_{d-1}");
    }
    led.add("reg1_factorial_bound",
            reg1_factorial_bound(in.xi[static_cast<std::size_t>(d - 1)],
                                 in.delta_prime, d, lim));
    led.add("reg_bound_all_coeffs",
            reg_bound_all_coeffs(in.xi[static_cast<std::size_t>(d)], in.r, d,
                                 lim));
    led.add("reg_bound_first_coeffs",
            reg_bound_first_coeffs(in.xi[static_cast<std::size_t>(d - t)],
                                   in.r, d, t, lim));

    for (int i = 1; i <= d; ++i) {
        long long arg = i == 1 ? e0 : in.xi[static_cast<std::size_t>(i - 1)];
        NextCoeffBound nc = next_coeff_bound(arg, in.r, i, lim);
        led.add("next_coeff_bound_" + std::to_string(i), nc.strong);
        if (i >= 2)
            led.add("next_coeff_bound_weak_" + std::to_string(i), nc.weak);
    }

    if (t < 1) {
        led.add_inapplicable("tail_coeff_bound", "requires t >= 1");
        led.add_inapplicable("tail_coeff_bound_adic", "requires t >= 1");
    } else {
        for (int j = d - t + 1; j <= d; ++j) {
            std::string sj = std::to_string(j);
            TailCoeffBound tc =
                tail_coeff_bound(in.xi[static_cast<std::size_t>(d - t)], e0,
                                 in.r, d, t, j, lim);
            led.add("tail_coeff_bound_" + sj, tc.general);
            if (in.r == 0)
                led.add("tail_coeff_bound_adic_" + sj, tc.adic);
            else
                led.add_inapplicable("tail_coeff_bound_adic_" + sj,
                                     "requires adic filtration (r = 0)");
            if (tc.cm)
                led.add("tail_coeff_bound_cm_" + sj, *tc.cm);
        }
    }

    for (int i = 1; i <= d; ++i) {
        std::string si = std::to_string(i);
        if (in.B && in.reg) {
            SectionCoeffBound sc = section_coeff_bound(
                *in.B, *in.reg, in.reg1.value_or(*in.reg), i, lim);
            led.add("coeff_section_bound_" + si, sc.filtration);
            if (i <= d - 1 && t >= 1 && in.reg1)
                led.add("graded_coeff_section_bound_" + si, sc.graded);
            else if (i <= d - 1)
                led.add_inapplicable("graded_coeff_section_bound_" + si,
                                     "requires depth >= 1");
        } else {
            led.add_inapplicable("coeff_section_bound_" + si,
                                 "requires reg and B");
            if (i <= d - 1)
                led.add_inapplicable("graded_coeff_section_bound_" + si,
                                     "requires reg and B");
        }
    }

    if (in.reg) {
        BigInt factor = BigInt::pow(BigInt(*in.reg + 2),
                                    static_cast<unsigned>(d), lim.bigint_bits);
        BigInt xid(in.xi[static_cast<std::size_t>(d)]);
        for (int i = 0; i < d; ++i)
            led.add("h0_chain_bound_" + std::to_string(i),
                    BigInt(i + 1) * xid * factor);
        led.add("section_length_bound", BigInt(d + 1) * xid * factor);
    } else {
        for (int i = 0; i < d; ++i)
            led.add_inapplicable("h0_chain_bound_" + std::to_string(i),
                                 "requires reg");
        led.add_inapplicable("section_length_bound", "requires reg");
    }

    if (in.reg_sat && in.h0) {
        led.add("reg_sat_h0_bound",
                BigInt(std::max(*in.reg_sat, in.r)) + BigInt(*in.h0));
    } else {
        led.add_inapplicable("reg_sat_h0_bound", "requires reg of saturation");
    }

    const bool have_all_e = static_cast<int>(in.e.size()) >= d + 1;
    if (in.reg_sat && have_all_e) {
        // P evaluated at reg of the saturated module
        BigInt v(0);
        for (int i = 0; i <= d; ++i) {
            BigInt term = BigInt(in.e[static_cast<std::size_t>(i)]) *
                          BigInt::binomial(BigInt(*in.reg_sat + d - i),
                                           static_cast<unsigned>(d - i));
            if (i % 2)
                v -= term;
            else
                v += term;
        }
        led.add("h0_poly_bound", v);
    } else {
        led.add_inapplicable("h0_poly_bound", "requires reg of saturation");
    }
    return led;
}

std::string format_bound(const BigInt& v) {
    std::string dec = v.to_decimal();
    std::size_t digits = v.decimal_digits();
    if (digits <= 15) return dec;
    std::size_t off = v.is_negative() ? 1 : 0;
    std::string mant;
    mant += dec[off];
    mant += '.';
    mant += dec.substr(off + 1, 2);
    return (v.is_negative() ? std::string("-") : std::string()) + "~ " + mant +
           "e" + std::to_string(digits - 1) + " (" + std::to_string(digits) +
           " digits)";
}

}  // namespace hf
