#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "piser/bigint.hpp"
#include "piser/factorization.hpp"
#include "piser/fixed_dec.hpp"
#include "piser/rational.hpp"

using namespace piser;

namespace {

BigInt random_bigint(std::mt19937_64& rng, int max_digits) {
    std::uniform_int_distribution<int> len(1, max_digits);
    std::uniform_int_distribution<int> dig(0, 9);
    int n = len(rng);
    std::string s;
    for (int i = 0; i < n; ++i) s.push_back(static_cast<char>('0' + dig(rng)));
    if (rng() & 1) s.insert(0, 1, '-');
    return BigInt::parse(s);
}

}  // namespace

TEST_CASE("bigint string round trip and canonical zero") {
    for (const char* s : {"0", "1", "-1", "999999999", "1000000000", "-123456789012345678901234567890"}) {
        CHECK(BigInt::parse(s).to_string() == s);
    }
    CHECK(BigInt::parse("-0").to_string() == "0");
    CHECK(BigInt::parse("000042").to_string() == "42");
    CHECK(BigInt(0).sign() == 0);
    CHECK((BigInt(5) - BigInt(5)).sign() == 0);
    CHECK_THROWS_AS(BigInt::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BigInt::parse("12x4"), std::invalid_argument);
}

TEST_CASE("bigint arithmetic identities") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        BigInt a = random_bigint(rng, 60);
        BigInt b = random_bigint(rng, 45);
        CHECK((a + b) - b == a);
        if (!b.is_zero()) {
            BigInt q, r;
            BigInt::divmod(a, b, q, r);
            CHECK(q * b + r == a);
            CHECK(r.abs() < b.abs());
            if (!r.is_zero()) CHECK(r.sign() == a.sign());
            CHECK((a * b) / b == a);
        }
    }
}

TEST_CASE("bigint multiplication crosses the karatsuba threshold") {
    // ~600-digit operands force the recursive path; division undoes them.
    std::mt19937_64 rng(2);
    BigInt a = random_bigint(rng, 600);
    BigInt b = random_bigint(rng, 550);
    if (a.is_zero()) a = BigInt(7);
    if (b.is_zero()) b = BigInt(11);
    CHECK(BigInt::div_exact(a * b, a) == b);
    CHECK(BigInt::div_exact(a * b, b) == a);
    CHECK((a * b).digits10() <= a.digits10() + b.digits10());
}

TEST_CASE("bigint pow10 and digit count") {
    CHECK(BigInt::pow10(0) == BigInt(1));
    CHECK(BigInt::pow10(9).to_string() == "1000000000");
    CHECK(BigInt::pow10(25).digits10() == 26);
    CHECK(BigInt(0).digits10() == 1);
}

TEST_CASE("gcd and lcm") {
    CHECK(gcd(BigInt(12), BigInt(-18)) == BigInt(6));
    CHECK(gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(lcm(BigInt(4), BigInt(6)) == BigInt(12));
}

TEST_CASE("binomial against a Pascal-triangle oracle") {
    CHECK(binomial(3, 1) == BigInt(3));
    CHECK(binomial(0, 0) == BigInt(1));
    CHECK_THROWS_AS(binomial(4, 5), std::domain_error);

    // Independent oracle: build the triangle by additions only.
    std::vector<std::vector<BigInt>> pascal(61);
    for (int n = 0; n <= 60; ++n) {
        pascal[n].assign(n + 1, BigInt(1));
        for (int k = 1; k < n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + pascal[n - 1][k];
    }
    CHECK(binomial(8, 4) == pascal[8][4]);
    CHECK(pascal[8][4] == BigInt(70));
    for (int n = 1; n <= 60; ++n)
        for (int k = 0; k <= n; ++k) REQUIRE(binomial(n, k) == pascal[n][k]);
}

TEST_CASE("factor_smooth") {
    Factorization f = factor_smooth(BigInt(11025), 100);
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<BigInt, int>(BigInt(3), 2));
    CHECK(f.factors[1] == std::pair<BigInt, int>(BigInt(5), 2));
    CHECK(f.factors[2] == std::pair<BigInt, int>(BigInt(7), 2));
    CHECK(f.cofactor.is_one());
    CHECK(f.to_string() == "3^2 · 5^2 · 7^2");

    Factorization one = factor_smooth(BigInt(1), 100);
    CHECK(one.factors.empty());
    CHECK(one.cofactor.is_one());

    // 2*10^9 + 33 has no prime factor below 10; the cofactor is the number
    // itself, and a direct trial-division primality check confirms it is in
    // fact prime (so no bound would have split it).
    BigInt n = BigInt(2000000033);
    Factorization g = factor_smooth(n, 10);
    CHECK(g.factors.empty());
    CHECK(g.cofactor == n);
    std::int64_t v = 2000000033;
    bool prime = v > 1;
    for (std::int64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) { prime = false; break; }
    CHECK(prime);

    CHECK_THROWS_AS(factor_smooth(BigInt(0), 100), std::domain_error);
    CHECK_THROWS_AS(factor_smooth(BigInt(10), 1), std::domain_error);
}

TEST_CASE("factor_smooth reconstruction property") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        BigInt n = random_bigint(rng, 12);
        if (n.is_zero()) continue;
        Factorization f = factor_smooth(n, 50);
        CHECK(f.value() == n.abs());
        for (std::size_t i = 1; i < f.factors.size(); ++i)
            CHECK(f.factors[i - 1].first < f.factors[i].first);
    }
}

TEST_CASE("rational normalization and exact arithmetic") {
    Rational q(BigInt(-4), BigInt(-6));
    CHECK(q.num() == BigInt(2));
    CHECK(q.den() == BigInt(3));
    CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);

    std::mt19937_64 rng(4);
    std::uniform_int_distribution<std::int64_t> d(-1000, 1000);
    for (int t = 0; t < 200; ++t) {
        Rational a(d(rng), 1 + std::abs(d(rng)));
        Rational b(d(rng), 1 + std::abs(d(rng)));
        CHECK((a + b) - b == a);
        if (!b.is_zero()) CHECK((a * b) / b == a);
        CHECK(gcd(a.num(), a.den()).is_one());
        CHECK(a.den().sign() > 0);
    }
    CHECK(Rational::parse("-22/7").to_string() == "-22/7");
    CHECK(Rational::parse("5").to_string() == "5");
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
}

TEST_CASE("shifted factorial") {
    CHECK(shifted_factorial(Rational(1), 4) == Rational(24));
    CHECK(shifted_factorial(Rational(7, 3), 0) == Rational(1));
    // direct product oracle
    Rational expect(1);
    for (int i = 0; i < 3; ++i) expect *= Rational(2 + i);
    CHECK(shifted_factorial(Rational(2), 3) == expect);
    CHECK(expect == Rational(24));
    CHECK(shifted_factorial(Rational(-3), 5) == Rational(0));
}

TEST_CASE("to_fixed rounding") {
    FixedDec a = to_fixed(Rational(1, 3), 5);
    CHECK(a.mantissa == BigInt(33333));
    CHECK(a.scale == 5);
    CHECK(to_fixed(Rational(1, 2), 0).mantissa == BigInt(1));   // half away from zero
    CHECK(to_fixed(Rational(-1, 2), 0).mantissa == BigInt(-1));
    CHECK(to_fixed(Rational(-7, 4), 2).mantissa == BigInt(-175));
}

TEST_CASE("to_fixed error bound property") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<std::int64_t> d(-100000, 100000);
    for (int t = 0; t < 100; ++t) {
        Rational q(d(rng), 1 + std::abs(d(rng)));
        int D = static_cast<int>(rng() % 8);
        FixedDec f = to_fixed(q, D);
        // |f - q| <= (1/2) 10^-D, exactly: |2 (m 10^-D - q)| <= 10^-D
        Rational diff = f.to_rational() - q;
        Rational half_ulp(BigInt(1), BigInt(2) * BigInt::pow10(D));
        CHECK(diff.abs() <= half_ulp);
    }
}

TEST_CASE("fixed decimal strings and comparisons") {
    CHECK(FixedDec(BigInt(-314159), 5).to_string() == "-3.14159");
    CHECK(FixedDec(BigInt(42), 4).to_string() == "0.0042");
    CHECK(FixedDec(BigInt(17), 0).to_string() == "17");
    CHECK(FixedDec::parse("-3.14159").mantissa == BigInt(-314159));
    CHECK(FixedDec::parse("0.0042").scale == 4);
    // comparisons align scales exactly
    CHECK(FixedDec(BigInt(5), 1) == FixedDec(BigInt(500), 3));
    CHECK(FixedDec(BigInt(4999), 4) < FixedDec(BigInt(5), 1));
    FixedDec diff = FixedDec(BigInt(500), 3) - FixedDec(BigInt(5), 1);
    CHECK(diff.mantissa.is_zero());
    CHECK(FixedDec(BigInt(99), 4).abs_less_than_pow10(2));
    CHECK(!FixedDec(BigInt(101), 4).abs_less_than_pow10(2));
}
