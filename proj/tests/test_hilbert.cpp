#include "doctest.h"

#include "hf/errors.hpp"
#include "hf/hilbert.hpp"
#include "hf/rng.hpp"
#include "test_util.hpp"

using namespace hf;

namespace {

MonomialIdeal ideal(int n, std::vector<std::vector<int>> gens) {
    std::vector<Monomial> g;
    for (auto& e : gens) g.emplace_back(std::move(e));
    return minimalize(n, std::move(g));
}

MonomialIdeal random_ideal(SplitMix64& rng, int n, int deg_max, int gen_max) {
    int gens = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(gen_max)));
    std::vector<Monomial> g;
    for (int i = 0; i < gens; ++i) {
        int deg = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(deg_max)));
        std::vector<int> e(static_cast<std::size_t>(n), 0);
        for (int j = 0; j < deg; ++j)
            e[static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(n)))]++;
        g.emplace_back(std::move(e));
    }
    return minimalize(n, std::move(g));
}

FiltrationSpec adic_spec(MonomialIdeal q) {
    FiltrationSpec f;
    f.ring.n = q.vars();
    f.Q = std::move(q);
    f.J = MonomialIdeal::maximal(f.ring.n);
    f.initial = {MonomialIdeal::unit(f.ring.n)};
    return f;
}

}  // namespace

TEST_CASE("hilbert function basics") {
    CHECK(hilbert_function(MonomialIdeal::zero(2), 3) == 4);
    for (int s = 2; s <= 4; ++s) {
        MonomialIdeal q = ideal(2, {{2, 0}, {1, s}});
        for (int j = 1; j <= s; ++j) CHECK(hilbert_function(q, j) == 2);
        for (int j = s + 1; j <= s + 3; ++j) CHECK(hilbert_function(q, j) == 1);
    }
    CHECK(hilbert_function(ideal_power(MonomialIdeal::maximal(2), 3), 9) == 0);
}

TEST_CASE("series numerator on the catalog examples") {
    CHECK(series_numerator(MonomialIdeal::zero(2)) == std::vector<long long>{1});
    CHECK(series_numerator(MonomialIdeal::maximal(2)) ==
          std::vector<long long>{1, -2, 1});
    for (int s = 1; s <= 4; ++s) {
        std::vector<long long> expect(static_cast<std::size_t>(s) + 3, 0);
        expect[0] = 1;
        expect[2] += -1;                                  // -t^2
        expect[static_cast<std::size_t>(s) + 1] += -1;    // -t^{s+1}
        expect[static_cast<std::size_t>(s) + 2] += 1;     // +t^{s+2}
        if (s == 1) {  // -t^2 and -t^{s+1} collide
            expect.assign({1, 0, -2, 1});
        }
        CHECK(series_numerator(ideal(2, {{2, 0}, {1, s}})) == expect);
    }
    CHECK_THROWS_AS(series_numerator(MonomialIdeal::unit(2)), malformed_input);
}

TEST_CASE("two hilbert function algorithms agree on 200 random ideals") {
    SplitMix64 rng(2024);
    int done = 0;
    while (done < 200) {
        int n = 1 + static_cast<int>(rng.below(4));
        MonomialIdeal q = random_ideal(rng, n, 6, 6);
        if (q.is_unit()) continue;
        std::vector<long long> numer = series_numerator(q);
        std::vector<long long> h = expand_series(numer, n, 13);
        for (int j = 0; j <= 12; ++j)
            REQUIRE(h[static_cast<std::size_t>(j)] == hilbert_function(q, j));
        ++done;
    }
}

TEST_CASE("krull dimension matches the degree of the hilbert polynomial") {
    SplitMix64 rng(77);
    int done = 0;
    while (done < 100) {
        int n = 1 + static_cast<int>(rng.below(3));
        MonomialIdeal q = random_ideal(rng, n, 4, 5);
        if (q.is_unit()) continue;
        int d = krull_dim(q);
        // successive differences of the hilbert function kill the polynomial
        // part after exactly d steps
        std::vector<long long> numer = series_numerator(q);
        int window = 0;
        for (long long c : numer) window += (c != 0);
        int hi = static_cast<int>(numer.size()) + n + 4;
        std::vector<long long> h = expand_series(numer, n, hi + 1);
        std::vector<long long> w(h.end() - (n + 2), h.end());
        int steps = 0;
        while (steps < n + 1) {
            bool zero = true;
            for (long long v : w)
                if (v != 0) zero = false;
            if (zero) break;
            for (std::size_t i = w.size(); i-- > 1;) w[i] -= w[i - 1];
            w.erase(w.begin());
            ++steps;
        }
        CHECK(steps == d);
        ++done;
        (void)window;
    }
}

TEST_CASE("filtration validation") {
    // valid: K[x], J=(x^2), N_1=(x)
    FiltrationSpec f;
    f.ring.n = 1;
    f.Q = MonomialIdeal::zero(1);
    f.J = ideal(1, {{2}});
    f.initial = {MonomialIdeal::unit(1), ideal(1, {{1}})};
    CHECK_NOTHROW(validate_filtration(f));

    // filtration condition violated: N_1 must contain J*N_0 + Q
    FiltrationSpec bad = f;
    bad.initial[1] = ideal(1, {{3}});
    CHECK(hf_test::throws_containing<malformed_input>(
        [&] { validate_filtration(bad); }, "is not contained in N_1"));

    // r not minimal: N_1 = J + Q
    FiltrationSpec redundant = f;
    redundant.initial[1] = ideal(1, {{2}});
    CHECK(hf_test::throws_containing<malformed_input>(
        [&] { validate_filtration(redundant); }, "not minimal"));

    // J not m-primary
    FiltrationSpec badj = adic_spec(MonomialIdeal::zero(2));
    badj.J = ideal(2, {{1, 0}});
    CHECK(hf_test::throws_containing<malformed_input>(
        [&] { validate_filtration(badj); }, "m-primary"));
}

TEST_CASE("hilbert-samuel values") {
    // example family: H(n) = (n+1) + min(n, s)
    for (int s = 1; s <= 3; ++s) {
        HilbertSamuel hs(adic_spec(ideal(2, {{2, 0}, {1, s}})));
        CHECK(hs.value(-1) == 0);
        for (int n = 0; n <= 8; ++n)
            CHECK(hs.value(n) == (n + 1) + std::min(n, s));
    }

    // K[x], J = (x^2), N_1 = (x): H(n) = 2n + 1
    FiltrationSpec f;
    f.ring.n = 1;
    f.Q = MonomialIdeal::zero(1);
    f.J = ideal(1, {{2}});
    f.initial = {MonomialIdeal::unit(1), ideal(1, {{1}})};
    HilbertSamuel hs(f);
    for (int n = 0; n <= 6; ++n) CHECK(hs.value(n) == 2 * n + 1);

    // the tail rule materializes N_{k+1} = J N_k + Q
    CHECK(hs.chain_ideal(3) == ideal(1, {{5}}));
}

TEST_CASE("fit coefficients: worked families") {
    // H(n) = (n+1) + min(n, s): e = (1, -s), postulation = s
    for (int s = 1; s <= 6; ++s) {
        std::vector<long long> values;
        for (int n = 0; n <= s + 8; ++n)
            values.push_back((n + 1) + std::min(n, s));
        HilbertCoefficients c = fit_coefficients(values, 1, FitMode::local, s, 6);
        CHECK(c.e == std::vector<long long>{1, -s});
        CHECK(c.postulation == s);
        CHECK_FALSE(c.guard_certified);
    }

    // H(n) = C(n+d, d) + min(n, s): e = (1, 0, ..., 0, (-1)^d s)
    for (int d = 1; d <= 3; ++d) {
        for (int s = 1; s <= 4; ++s) {
            std::vector<long long> values;
            for (int n = 0; n <= s + d + 8; ++n) {
                long long b = 1;
                for (int i = 1; i <= d; ++i) b = b * (n + i) / i;
                values.push_back(b + std::min(n, s));
            }
            HilbertCoefficients c =
                fit_coefficients(values, d, FitMode::local, -1, d + 5);
            std::vector<long long> expect(static_cast<std::size_t>(d) + 1, 0);
            expect[0] = 1;
            expect[static_cast<std::size_t>(d)] = (d % 2) ? -s : s;
            CHECK(c.e == expect);
            CHECK(c.postulation == s);
            CHECK(c.guard_certified);
        }
    }

    // J = (x^2, y^3) adic on K[x,y]: H(n) = 6 C(n+2, 2), e = (6, 0, 0)
    {
        FiltrationSpec f = adic_spec(MonomialIdeal::zero(2));
        f.J = ideal(2, {{2, 0}, {0, 3}});
        HilbertSamuel hs(f);
        std::vector<long long> values;
        for (int n = 0; n <= 12; ++n) values.push_back(hs.value(n));
        for (int n = 0; n <= 12; ++n)
            CHECK(values[static_cast<std::size_t>(n)] ==
                  6 * (n + 1) * (n + 2) / 2);
        HilbertCoefficients c = fit_coefficients(values, 2, FitMode::local, -1, 7);
        CHECK(c.e == std::vector<long long>{6, 0, 0});
        CHECK(c.postulation == 0);
    }
}

TEST_CASE("fit raises when the window is too short to stabilize") {
    // strictly pre-polynomial values: H of the s=6 family truncated early
    std::vector<long long> values;
    for (int n = 0; n <= 4; ++n) values.push_back((n + 1) + std::min(n, 6));
    CHECK_THROWS_AS(fit_coefficients(values, 1, FitMode::local, -1, 5),
                    resource_limit);
}

TEST_CASE("graded and local fits share e_0 in the adic maximal case") {
    SplitMix64 rng(55);
    int done = 0;
    while (done < 30) {
        int n = 1 + static_cast<int>(rng.below(3));
        MonomialIdeal q = random_ideal(rng, n, 4, 4);
        if (q.is_unit() || krull_dim(q) == 0) continue;
        int d = krull_dim(q);
        HilbertSamuel hs(adic_spec(q));
        std::vector<long long> values;
        for (int i = 0; i <= 2 * d + 14; ++i) values.push_back(hs.value(i));
        HilbertCoefficients local =
            fit_coefficients(values, d, FitMode::local, -1, d + 5);
        std::vector<long long> hvals;
        for (int j = 0; j <= 2 * d + 14; ++j) hvals.push_back(hilbert_function(q, j));
        HilbertCoefficients graded =
            fit_coefficients(hvals, d, FitMode::graded, -1, d + 5);
        REQUIRE(!graded.e.empty());
        CHECK(graded.e[0] == local.e[0]);
        ++done;
    }
}

TEST_CASE("saturated filtration pushes the chain forward") {
    FiltrationSpec f = adic_spec(ideal(2, {{2, 0}, {1, 2}}));
    FiltrationSpec s = saturated_filtration(f);
    CHECK(s.Q == ideal(2, {{1, 0}}));
    CHECK(s.r() == 0);
    CHECK_NOTHROW(validate_filtration(s));
}

TEST_CASE("xi values") {
    CHECK(xi_values({1, -3}) == std::vector<long long>{1, 3});
    CHECK(xi_values({2, 1, -5, 0}) == std::vector<long long>{2, 2, 5, 5});
}

TEST_CASE("hilbert-samuel functions are nondecreasing with eventually "
          "polynomial first difference") {
    SplitMix64 rng(88);
    int done = 0;
    while (done < 20) {
        int n = 1 + static_cast<int>(rng.below(3));
        MonomialIdeal q = random_ideal(rng, n, 4, 4);
        if (q.is_unit() || krull_dim(q) == 0) continue;
        int d = krull_dim(q);
        FiltrationSpec f = adic_spec(q);
        if (rng.below(2) == 0 && n <= 2) {
            // replace the maximal ideal by a small m-primary J
            std::vector<Monomial> jg;
            for (int i = 0; i < n; ++i) {
                std::vector<int> e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i)] = 1 + static_cast<int>(rng.below(2));
                jg.emplace_back(std::move(e));
            }
            f.J = minimalize(n, std::move(jg));
        }
        HilbertSamuel hs(f);
        std::vector<long long> values;
        for (int i = 0; i <= 2 * d + 12; ++i) values.push_back(hs.value(i));
        for (std::size_t i = 1; i < values.size(); ++i)
            CHECK(values[i] >= values[i - 1]);  // quotient lengths >= 0
        // the tail of the first difference is a degree-(d-1) polynomial:
        // the local fit must reproduce every window value
        HilbertCoefficients c =
            fit_coefficients(values, d, FitMode::local, -1, d + 5);
        CHECK(c.e[0] >= 1);
        ++done;
    }
}
