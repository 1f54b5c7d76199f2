#include "hf/bigint.hpp"

#include <algorithm>
#include <cassert>

#include "hf/errors.hpp"

namespace hf {

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    unsigned long long u = v < 0 ? 0ull - static_cast<unsigned long long>(v)
                                 : static_cast<unsigned long long>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::ucmp(const std::vector<std::uint32_t>& a,
                 const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::uadd(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    const auto& big = a.size() >= b.size() ? a : b;
    const auto& small = a.size() >= b.size() ? b : a;
    std::vector<std::uint32_t> r(big.size() + 1, 0);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        std::uint64_t s = carry + big[i] + (i < small.size() ? small[i] : 0u);
        r[i] = static_cast<std::uint32_t>(s);
        carry = s >> 32;
    }
    r[big.size()] = static_cast<std::uint32_t>(carry);
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::usub(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    assert(ucmp(a, b) >= 0);
    std::vector<std::uint32_t> r(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t s = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (s < 0) {
            s += (std::int64_t(1) << 32);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r[i] = static_cast<std::uint32_t>(s);
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::umul(const std::vector<std::uint32_t>& a,
                                        const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        std::uint64_t ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t s = ai * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t s = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(s);
            carry = s >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::uint32_t BigInt::udivmod_small(std::vector<std::uint32_t>& a,
                                    std::uint32_t div) {
    assert(div != 0);
    std::uint64_t rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        std::uint64_t cur = (rem << 32) | a[i];
        a[i] = static_cast<std::uint32_t>(cur / div);
        rem = cur % div;
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return static_cast<std::uint32_t>(rem);
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        mag_ = uadd(mag_, o.mag_);
    } else {
        int c = ucmp(mag_, o.mag_);
        if (c == 0) {
            sign_ = 0;
            mag_.clear();
        } else if (c > 0) {
            mag_ = usub(mag_, o.mag_);
        } else {
            mag_ = usub(o.mag_, mag_);
            sign_ = o.sign_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    mag_ = umul(mag_, o.mag_);
    sign_ *= o.sign_;
    trim();
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_)
        return a.sign_ < b.sign_ ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    int c = BigInt::ucmp(a.mag_, b.mag_);
    if (a.sign_ < 0) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::size_t BigInt::bit_length() const {
    if (mag_.empty()) return 0;
    std::uint32_t top = mag_.back();
    std::size_t bits = (mag_.size() - 1) * 32;
    while (top) {
        ++bits;
        top >>= 1;
    }
    return bits;
}

std::size_t BigInt::decimal_digits() const {
    if (is_zero()) return 1;
    return to_decimal().size() - (sign_ < 0 ? 1 : 0);
}

std::string BigInt::to_decimal() const {
    if (is_zero()) return "0";
    std::vector<std::uint32_t> tmp = mag_;
    std::string out;
    while (!tmp.empty()) {
        std::uint32_t rem = udivmod_small(tmp, 1000000000u);
        if (tmp.empty()) {
            // most significant block, no zero padding
            out.insert(0, std::to_string(rem));
        } else {
            std::string blk = std::to_string(rem);
            out.insert(0, std::string(9 - blk.size(), '0') + blk);
        }
    }
    if (sign_ < 0) out.insert(0, "-");
    return out;
}

BigInt BigInt::from_decimal(std::string_view s) {
    BigInt r;
    bool neg = false;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) {
        neg = s[i] == '-';
        ++i;
    }
    if (i == s.size()) throw malformed_input("empty integer literal");
    for (; i < s.size(); ++i) {
        if (s[i] < '0' || s[i] > '9')
            throw malformed_input("bad digit in integer literal");
        // r = r * 10 + d
        std::uint64_t carry = static_cast<std::uint64_t>(s[i] - '0');
        for (std::size_t k = 0; k < r.mag_.size(); ++k) {
            std::uint64_t cur = static_cast<std::uint64_t>(r.mag_[k]) * 10 + carry;
            r.mag_[k] = static_cast<std::uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.mag_.push_back(static_cast<std::uint32_t>(carry));
    }
    r.sign_ = r.mag_.empty() ? 0 : (neg ? -1 : 1);
    r.trim();
    return r;
}

BigInt BigInt::shifted_left(std::size_t k) const {
    if (is_zero()) return BigInt();
    BigInt r;
    r.sign_ = 1;
    std::size_t limbs = k / 32, bits = k % 32;
    r.mag_.assign(limbs, 0);
    if (bits == 0) {
        r.mag_.insert(r.mag_.end(), mag_.begin(), mag_.end());
    } else {
        std::uint32_t carry = 0;
        for (std::uint32_t limb : mag_) {
            r.mag_.push_back((limb << bits) | carry);
            carry = static_cast<std::uint32_t>(
                (static_cast<std::uint64_t>(limb) >> (32 - bits)));
        }
        if (carry) r.mag_.push_back(carry);
    }
    return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long exp,
                   std::size_t max_bits) {
    // quick budget estimate before any work
    if (!base.is_zero() && base.bit_length() > 1) {
        unsigned long long est = exp * static_cast<unsigned long long>(base.bit_length());
        if (exp != 0 && est / exp != base.bit_length())
            throw resource_limit("power exponent overflows bit budget");
        if (est > max_bits)
            throw resource_limit("power result exceeds bit budget (" +
                                 std::to_string(est) + " bits estimated)");
    }
    BigInt result(1);
    BigInt b = base;
    while (exp) {
        if (exp & 1) {
            result *= b;
            if (result.bit_length() > max_bits)
                throw resource_limit("power result exceeds bit budget");
        }
        exp >>= 1;
        if (exp) {
            b *= b;
            if (b.bit_length() > max_bits)
                throw resource_limit("power result exceeds bit budget");
        }
    }
    return result;
}

BigInt BigInt::binomial(const BigInt& top, unsigned k) {
    // C(top, k) = prod_{i=1..k} (top - k + i) / i, exact at every step.
    BigInt r(1);
    for (unsigned i = 1; i <= k; ++i) {
        BigInt factor = top - BigInt(static_cast<long long>(k)) +
                        BigInt(static_cast<long long>(i));
        r *= factor;
        if (r.is_zero()) return BigInt(0);
        std::uint32_t rem = udivmod_small(r.mag_, i);
        if (rem != 0)
            throw error("binomial: stepwise division not exact");
        r.trim();
    }
    return r;
}

unsigned long long BigInt::factorial_u64(unsigned n) {
    if (n > 20) throw resource_limit("factorial exceeds 64-bit range (n > 20)");
    unsigned long long r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

bool BigInt::fits_i64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= 0x7fffffffffffffffull;
    return u <= 0x8000000000000000ull;
}

long long BigInt::to_i64() const {
    if (!fits_i64()) throw resource_limit("value does not fit in 64 bits");
    std::uint64_t u = 0;
    if (mag_.size() > 1) u = static_cast<std::uint64_t>(mag_[1]) << 32;
    if (!mag_.empty()) u |= mag_[0];
    return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
}

long long log2_margin(const BigInt& lhs, const BigInt& rhs) {
    BigInt l = lhs <= BigInt(1) ? BigInt(1) : lhs;
    if (rhs.sign() <= 0) {
        // ratio <= 0 is meaningless; callers only ask with rhs >= 1
        return 0;
    }
    // floor(log2(rhs/l)) is bitlen(rhs)-bitlen(l) or one less/more; probe.
    long long k0 = static_cast<long long>(rhs.bit_length()) -
                   static_cast<long long>(l.bit_length());
    for (long long k = k0 + 1; k >= k0 - 1; --k) {
        bool ok;
        if (k >= 0)
            ok = l.shifted_left(static_cast<std::size_t>(k)) <= rhs;
        else
            ok = l <= rhs.shifted_left(static_cast<std::size_t>(-k));
        if (ok) return k;
    }
    return k0 - 2;
}

}  // namespace hf
