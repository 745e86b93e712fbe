#include "piser/evalnum.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace piser {

namespace {

double to_double_approx(const BigInt& v) {
    std::string s = v.abs().to_string();
    int e = static_cast<int>(s.size()) - 1;
    std::string head = s.substr(0, 15);
    double x = std::stod(head) * std::pow(10.0, e - static_cast<int>(head.size()) + 1);
    return v.sign() < 0 ? -x : x;
}

double to_double_approx(const Rational& q) {
    return to_double_approx(q.num()) / to_double_approx(q.den());
}

// Round num/den to scale D without normalizing the fraction first (the
// operands coming out of binary splitting are huge and share big factors).
FixedDec to_fixed_ratio(const BigInt& num, const BigInt& den, int D) {
    BigInt t = num.abs() * BigInt::pow10(D);
    BigInt quot, rem;
    BigInt::divmod(t, den.abs(), quot, rem);
    if (rem + rem >= den.abs()) quot += BigInt(1);
    if (num.sign() * den.sign() < 0) quot = -quot;
    return FixedDec(std::move(quot), D);
}

// |S|(n) with all coefficients replaced by absolute values, times (mn+1).
Rational term_envelope(const Formula& F, const Rational& n) {
    Rational acc(0);
    for (std::size_t i = F.S_int.size(); i-- > 0;) acc = acc * n + Rational(F.S_int[i].abs());
    return (Rational(F.m) * n + Rational(1)) * acc;
}

}  // namespace

Rational convergence_ratio(const Formula& F) {
    F.validate();
    BigInt num = BigInt(F.p).pow(static_cast<unsigned>(F.p)) *
                 BigInt(F.m - F.p).pow(static_cast<unsigned>(F.m - F.p));
    BigInt den = BigInt(F.m).pow(static_cast<unsigned>(F.m)) * F.a.abs();
    return Rational(num, den);
}

std::int64_t terms_needed(const Formula& F, int D) {
    if (D < 0) throw std::domain_error("terms_needed: negative digit count");
    Rational beta = convergence_ratio(F);
    if (beta >= Rational(1)) throw std::domain_error("terms_needed: divergent parameters");

    int deg = static_cast<int>(F.S_int.size()) - 1;
    double lb = -std::log10(to_double_approx(beta));  // digits gained per term
    auto verified = [&](std::int64_t T) {
        // gamma bounds the growth of (mn+1)|S|(n) from n = T on.
        Rational gamma = Rational(T + 1, T).pow(deg + 2);
        Rational gb = gamma * beta;
        if (gb >= Rational(1)) return false;
        Rational tail = term_envelope(F, Rational(T)) * beta.pow(static_cast<int>(T)) / (Rational(1) - gb);
        return tail < Rational(BigInt(1), BigInt::pow10(D + 2));
    };
    double g0 = std::max(1.0, to_double_approx(term_envelope(F, Rational(1))));
    std::int64_t T = static_cast<std::int64_t>((D + 3 + std::log10(g0)) / lb) + 2 * (deg + 2) + 2;
    if (T < 1) T = 1;
    while (!verified(T)) T = T + T / 4 + 4;
    return T;
}

FixedDec eval_formula(const Formula& F, int D) {
    F.validate();
    std::int64_t T = terms_needed(F, D);
    SplitPair ps = formula_partial_sum(F, 0, T);
    return to_fixed_ratio(ps.num, ps.den * F.r, D);
}

namespace {

struct PiCache {
    std::mutex mu;
    int digits = -1;
    Rational guarded;  // within 10^(-digits-10) of pi
};
PiCache g_pi_cache;

Rational pi_rational_guarded(int D) {
    // arctan tail after T terms is below x^-(2T+1), so (2T+1) log10 x > D+12
    // keeps both tails under 10^(-D-12).
    auto arc_terms = [&](double log10x) {
        return static_cast<std::int64_t>((D + 12) / (2.0 * log10x)) + 2;
    };
    Rational a5 = arctan_inv_partial(5, arc_terms(std::log10(5.0)));
    Rational a239 = arctan_inv_partial(239, arc_terms(std::log10(239.0)));
    return Rational(16) * a5 - Rational(4) * a239;
}

}  // namespace

FixedDec pi_reference(int D) {
    if (D < 1) throw std::domain_error("pi_reference: D must be >= 1");
    std::lock_guard<std::mutex> lock(g_pi_cache.mu);
    if (g_pi_cache.digits < D) {
        g_pi_cache.guarded = pi_rational_guarded(D);
        g_pi_cache.digits = D;
    }
    return to_fixed_ratio(g_pi_cache.guarded.num(), g_pi_cache.guarded.den(), D);
}

NumericReport verify_formula_numeric(const Formula& F, int D) {
    NumericReport rep;
    FixedDec e = eval_formula(F, D);
    FixedDec ref = pi_reference(D);
    rep.residual = (e - ref).abs();
    rep.pass = rep.residual.abs_less_than_pow10(D - 5);
    return rep;
}

std::string format_digits(const FixedDec& v) {
    std::string s = v.to_string();
    auto dot = s.find('.');
    std::string out = s.substr(0, dot == std::string::npos ? s.size() : dot + 1);
    if (dot == std::string::npos) return out + "\n";
    std::string frac = s.substr(dot + 1);
    out += "\n";
    for (std::size_t i = 0; i < frac.size(); i += 10) {
        out += frac.substr(i, 10);
        std::size_t done = i + 10;
        if (done >= frac.size() || done % 50 == 0)
            out += "\n";
        else
            out += "  ";
    }
    return out;
}

}  // namespace piser
