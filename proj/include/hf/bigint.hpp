#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hf {

/// Signed arbitrary-precision integer, base 2^32 magnitude limbs.
///
/// The bound formulas produce values like 4^1200 - 2; everything here is
/// exact.  Multiplication is schoolbook, which is ample at the sizes the
/// ledger produces (thousands of bits).
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);

    static BigInt from_decimal(std::string_view s);

    /// base^exp with a bit budget; throws resource_limit when the result
    /// would exceed `max_bits`.
    static BigInt pow(const BigInt& base, unsigned long long exp,
                      std::size_t max_bits = kDefaultBitBudget);

    /// Binomial coefficient with big top and small bottom, exact
    /// multiplicative evaluation with stepwise exact division.  Negative
    /// tops follow the generalized (polynomial) binomial.
    static BigInt binomial(const BigInt& top, unsigned k);

    /// n! as a checked 64-bit value; n <= 20.
    static unsigned long long factorial_u64(unsigned n);

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    int sign() const { return sign_; }

    /// Number of bits of |x|; 0 for x == 0.
    std::size_t bit_length() const;
    /// Number of decimal digits of |x|; 1 for x == 0.
    std::size_t decimal_digits() const;

    std::string to_decimal() const;

    /// |x| * 2^k.
    BigInt shifted_left(std::size_t k) const;

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    friend bool operator==(const BigInt& a, const BigInt& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    /// Fits in long long?  (For tests and small-value fast paths.)
    bool fits_i64() const;
    long long to_i64() const;

    static constexpr std::size_t kDefaultBitBudget = std::size_t(1) << 23;

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint32_t> mag_;  // little-endian, no leading zeros

    void trim();
    static int ucmp(const std::vector<std::uint32_t>& a,
                    const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> uadd(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b);
    // requires a >= b
    static std::vector<std::uint32_t> usub(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> umul(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b);
    // divides in place by a 32-bit divisor, returns the remainder
    static std::uint32_t udivmod_small(std::vector<std::uint32_t>& a,
                                       std::uint32_t div);
};

/// floor(log2(rhs / max(lhs, 1))) for rhs >= 1, the "tightness margin" of a
/// passing check; negative when rhs < lhs.  Requires rhs >= 1 and lhs >= 0
/// in the sense that negative lhs is clamped through max(lhs, 1).
long long log2_margin(const BigInt& lhs, const BigInt& rhs);

}  // namespace hf
