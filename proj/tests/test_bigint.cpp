#include "doctest.h"

#include "hf/bigint.hpp"
#include "hf/errors.hpp"
#include "hf/rng.hpp"

using hf::BigInt;

TEST_CASE("small arithmetic round-trips through long long") {
    hf::SplitMix64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        long long a = static_cast<long long>(rng.next() % 2000001) - 1000000;
        long long b = static_cast<long long>(rng.next() % 2000001) - 1000000;
        CHECK((BigInt(a) + BigInt(b)).to_i64() == a + b);
        CHECK((BigInt(a) - BigInt(b)).to_i64() == a - b);
        CHECK((BigInt(a) * BigInt(b)).to_i64() == a * b);
        CHECK((BigInt(a) < BigInt(b)) == (a < b));
        CHECK((BigInt(a) == BigInt(b)) == (a == b));
    }
}

TEST_CASE("decimal round-trip") {
    const char* cases[] = {"0", "-1", "1", "999999999999999999999999999",
                           "-123456789012345678901234567890"};
    for (const char* s : cases)
        CHECK(BigInt::from_decimal(s).to_decimal() == s);
}

TEST_CASE("pow and digit counts") {
    BigInt v = BigInt::pow(BigInt(4), 1200) - BigInt(2);
    CHECK(v.decimal_digits() == 723);
    // independent check of the trailing digits: 4^1200 - 2 mod 10^9
    unsigned long long m = 1;
    for (int i = 0; i < 1200; ++i) m = m * 4 % 1000000000ull;
    m = (m + 1000000000ull - 2) % 1000000000ull;
    std::string dec = v.to_decimal();
    CHECK(std::stoull(dec.substr(dec.size() - 9)) == m);

    CHECK(BigInt::pow(BigInt(2), 10).to_i64() == 1024);
    CHECK(BigInt::pow(BigInt(7), 0).to_i64() == 1);
    CHECK(BigInt::pow(BigInt(0), 5).to_i64() == 0);
}

TEST_CASE("pow respects the bit budget") {
    CHECK_THROWS_AS(BigInt::pow(BigInt(2), 1u << 30, 4096), hf::resource_limit);
}

TEST_CASE("binomial: small values against Pascal") {
    long long pascal[25][25] = {};
    for (int n = 0; n < 25; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k)
            pascal[n][k] = pascal[n - 1][k - 1] + (k <= n - 1 ? pascal[n - 1][k] : 0);
    }
    for (int n = 0; n < 25; ++n)
        for (int k = 0; k < 25; ++k) {
            long long expect = k <= n ? pascal[n][k] : 0;
            CHECK(BigInt::binomial(BigInt(n), static_cast<unsigned>(k)).to_i64() ==
                  expect);
        }
}

TEST_CASE("binomial: huge top, small bottom") {
    BigInt top = BigInt::pow(BigInt(10), 30);  // 10^30
    BigInt v = BigInt::binomial(top, 2);       // 10^30 (10^30 - 1) / 2
    BigInt expect =
        (top * (top - BigInt(1)))
            .abs();
    // v * 2 == top * (top - 1)
    CHECK(v * BigInt(2) == expect);
}

TEST_CASE("binomial with negative top follows the polynomial convention") {
    CHECK(BigInt::binomial(BigInt(-1), 2).to_i64() == 1);   // (-1)(-2)/2
    CHECK(BigInt::binomial(BigInt(-2), 1).to_i64() == -2);
    CHECK(BigInt::binomial(BigInt(-2), 3).to_i64() == -4);  // (-2)(-3)(-4)/6
}

TEST_CASE("log2 margin") {
    CHECK(hf::log2_margin(BigInt(1), BigInt(1)) == 0);
    CHECK(hf::log2_margin(BigInt(0), BigInt(1)) == 0);
    CHECK(hf::log2_margin(BigInt(1), BigInt(2)) == 1);
    CHECK(hf::log2_margin(BigInt(3), BigInt(24)) == 3);
    CHECK(hf::log2_margin(BigInt(3), BigInt(23)) == 2);
    CHECK(hf::log2_margin(BigInt(8), BigInt(4)) == -1);
    CHECK(hf::log2_margin(BigInt(9), BigInt(4)) == -2);
    // s = reg tightness shape: equal sides give margin 0
    CHECK(hf::log2_margin(BigInt(5), BigInt(5)) == 0);
}

TEST_CASE("factorials fit 64 bits up to 20") {
    CHECK(BigInt::factorial_u64(0) == 1);
    CHECK(BigInt::factorial_u64(5) == 120);
    CHECK(BigInt::factorial_u64(20) == 2432902008176640000ull);
    CHECK_THROWS_AS(BigInt::factorial_u64(21), hf::resource_limit);
}
