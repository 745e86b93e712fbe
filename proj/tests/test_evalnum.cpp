#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <random>

#include "piser/evalnum.hpp"
#include "piser/prover.hpp"

using namespace piser;

namespace {

Formula gosper() {
    Formula F;
    F.m = 3;
    F.p = 1;
    F.a = BigInt(2);
    F.r = BigInt(1);
    F.S_int = {BigInt(-6), BigInt(50)};
    return F;
}

Formula from_certificate(int k) {
    prover::ProofCertificate cert = prover::prove(k);
    Formula F;
    F.m = 8 * k;
    F.p = 4 * k;
    F.a = BigInt(-4).pow(static_cast<unsigned>(k));
    F.r = cert.r;
    F.S_int = cert.S_int;
    F.provenance = Provenance::proven;
    F.proven_k = k;
    return F;
}

// exact term-by-term sum, the naive oracle for binary splitting
Rational naive_sum(const Formula& F, std::int64_t terms) {
    Rational acc(0);
    for (std::int64_t n = 0; n < terms; ++n) {
        Rational w(BigInt(1), binomial(F.m * n, F.p * n) * F.a.pow(static_cast<unsigned>(n)));
        acc += Rational(F.eval_S(n)) * w;
    }
    return acc;
}

const char* kPi50 = "3.14159265358979323846264338327950288419716939937511";

}  // namespace

TEST_CASE("convergence ratio") {
    CHECK(convergence_ratio(gosper()) == Rational(2, 27));
}

TEST_CASE("terms_needed bounds, verified by direct tail summation") {
    Formula F = gosper();
    std::int64_t T = terms_needed(F, 10);
    CHECK(T <= 25);
    // oracle: the next 50 terms sum below 10^(-12) in exact arithmetic
    Rational tail(0);
    for (std::int64_t n = T; n < T + 50; ++n) {
        Rational w(BigInt(1), binomial(3 * n, n) * BigInt(2).pow(static_cast<unsigned>(n)));
        tail += Rational(F.eval_S(n).abs()) * w;
    }
    CHECK(tail < Rational(BigInt(1), BigInt::pow10(12)));

    CHECK(terms_needed(F, 0) >= 1);

    Formula E1 = from_certificate(1);
    std::int64_t T1 = terms_needed(E1, 100);
    Rational tail1(0);
    for (std::int64_t n = T1; n < T1 + 50; ++n) {
        Rational w(BigInt(1), binomial(8 * n, 4 * n) * BigInt(-4).pow(static_cast<unsigned>(n)));
        tail1 += Rational(E1.eval_S(n).abs()) * w.abs();
    }
    CHECK(tail1 < Rational(BigInt(1), BigInt::pow10(102)));
}

TEST_CASE("binary splitting equals naive exact summation") {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> c(-40, 40);
    const int params[][3] = {{3, 1, 2}, {8, 4, -4}, {7, 2, 2}, {10, 4, 4}};
    for (auto& mp : params) {
        for (int t = 0; t < 3; ++t) {
            Formula F;
            F.m = mp[0];
            F.p = mp[1];
            F.a = BigInt(mp[2]);
            F.r = BigInt(1);
            F.S_int = {BigInt(c(rng)), BigInt(c(rng)), BigInt(1 + (rng() % 9))};
            std::int64_t T = 1 + static_cast<std::int64_t>(rng() % 50);
            SplitPair ps = formula_partial_sum(F, 0, T);
            REQUIRE(ps.value() == naive_sum(F, T));
        }
    }
}

TEST_CASE("split pair combination is associative over subranges") {
    Formula F = gosper();
    SplitPair whole = formula_partial_sum(F, 0, 37);
    SplitPair left = formula_partial_sum(F, 0, 19);
    SplitPair right = formula_partial_sum(F, 19, 37);
    // right enters with weight u(19): stitch exactly
    Rational w19(BigInt(1), binomial(57, 19) * BigInt(2).pow(19));
    CHECK(whole.value() == left.value() + w19 * right.value());
}

TEST_CASE("pi reference digits") {
    CHECK(pi_reference(15).to_string() == "3.141592653589793");
    CHECK(pi_reference(50).to_string() == kPi50);
    // prefix stability between scales
    FixedDec p50 = pi_reference(50);
    FixedDec p200 = pi_reference(200);
    CHECK((p200 - p50.rescaled(200)).abs_less_than_pow10(49));
    std::string s200 = p200.to_string();
    CHECK(s200.substr(0, 49) == std::string(kPi50).substr(0, 49));
}

TEST_CASE("eval matches the reference and scales linearly in 1/r") {
    Formula F = gosper();
    FixedDec v = eval_formula(F, 50);
    CHECK((v - pi_reference(50)).abs_less_than_pow10(48));

    Formula F2 = F;
    F2.r = BigInt(2);
    FixedDec v2 = eval_formula(F2, 50);
    FixedDec twice(v2.mantissa * BigInt(2), v2.scale);
    CHECK((twice - v).abs_less_than_pow10(48));
}

TEST_CASE("monotone refinement") {
    Formula F = gosper();
    FixedDec a = eval_formula(F, 30);
    FixedDec b = eval_formula(F, 90);
    CHECK((b - a.rescaled(90)).abs_less_than_pow10(29));
}

TEST_CASE("gosper at 1000 digits agrees with the reference") {
    FixedDec v = eval_formula(gosper(), 1000);
    FixedDec ref = pi_reference(1000);
    CHECK((v - ref).abs_less_than_pow10(997));
}

TEST_CASE("splitting stays softly linear out to 10000 digits") {
    auto t0 = std::chrono::steady_clock::now();
    FixedDec v = eval_formula(gosper(), 10000);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    CHECK(secs < 60.0);
    FixedDec head(v.mantissa / BigInt::pow10(9000), 1000);
    CHECK((head - pi_reference(1000)).abs_less_than_pow10(995));
}

TEST_CASE("numeric certification") {
    Formula E2 = from_certificate(2);
    NumericReport rep = verify_formula_numeric(E2, 300);
    CHECK(rep.pass);

    NumericReport g = verify_formula_numeric(gosper(), 100);
    CHECK(g.pass);

    // a single +1 perturbation of an integer coefficient shifts the series
    // by s(3)/r ~ 10^-17, far above the 10^-45 tolerance at D = 50
    Formula bad = E2;
    bad.S_int[3] += BigInt(1);
    NumericReport b = verify_formula_numeric(bad, 50);
    CHECK(!b.pass);
    CHECK(!b.residual.abs_less_than_pow10(20));  // residual > 10^-20
    CHECK(b.residual.abs_less_than_pow10(10));   // residual < 10^-10
}

TEST_CASE("digit stream format") {
    // 25 fractional digits: two full blocks of 10 and one of 5
    FixedDec v(BigInt::parse("31415926535897932384626433"), 25);
    CHECK(format_digits(v) ==
          "3.\n"
          "1415926535  8979323846  26433\n");
    CHECK(format_digits(FixedDec(BigInt(42), 0)) == "42\n");
}
