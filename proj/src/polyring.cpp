#include "piser/polyring.hpp"

#include <stdexcept>

namespace piser {

Rational binomial_poly_at(const Rational& x, int shift, int K) {
    Rational out(1);
    for (int i = 0; i < K; ++i) out *= (x + Rational(shift - i));
    return out / Rational(factorial(K));
}

std::vector<Rational> binomial_basis_expand(const Poly& S, int d) {
    if (S.degree() > d + 1) throw std::domain_error("binomial_basis_expand: degree too high");
    int K = d + 1;
    std::vector<Rational> a(static_cast<std::size_t>(d) + 2, Rational(0));
    // At n = 0 only the j = d+1 element is nonzero (value 1); at n = -t,
    // t = 1..d+1, the nonzero elements are exactly those with j < t. This
    // makes the coefficients triangular in the evaluations S(0), S(-1), ...
    a[static_cast<std::size_t>(d) + 1] = S.eval(Rational(0));
    for (int t = 1; t <= d + 1; ++t) {
        Rational rhs = S.eval(Rational(-t));
        for (int j = 0; j < t - 1; ++j)
            rhs -= a[static_cast<std::size_t>(j)] * binomial_poly_at(Rational(-t), j, K);
        a[static_cast<std::size_t>(t) - 1] = rhs / binomial_poly_at(Rational(-t), t - 1, K);
    }
    return a;
}

Poly gf_numerator_with_degree(const Poly& S, int m, int d) {
    if (S.is_zero()) throw std::domain_error("gf_numerator: zero polynomial");
    if (S.degree() > d) throw std::domain_error("gf_numerator: degree exceeds requested d");
    Poly h = Poly{Rational(1), Rational(m)} * S;  // (mn+1) S(n)
    std::vector<Rational> beta = binomial_basis_expand(h, d);
    std::vector<Rational> t(static_cast<std::size_t>(d) + 2, Rational(0));
    // sum_n C(n+u, d+1) y^n = y^(d+1-u) / (1-y)^(d+2)
    for (int u = 0; u <= d + 1; ++u)
        t[static_cast<std::size_t>(d + 1 - u)] = beta[static_cast<std::size_t>(u)];
    return Poly(std::move(t));
}

Poly gf_numerator(const Poly& S, int m) {
    return gf_numerator_with_degree(S, m, S.degree());
}

Poly series_coefficient_poly(const Poly& T, int denom_exp) {
    Poly h;
    for (int j = 0; j <= T.degree(); ++j) {
        if (T.coeff(j).is_zero()) continue;
        Poly b = Poly::constant(Rational(1));
        for (int i = 1; i <= denom_exp - 1; ++i)
            b *= Poly{Rational(i - j), Rational(1)};  // (n - j + i)
        h += b.scaled(T.coeff(j) / Rational(factorial(denom_exp - 1)));
    }
    return h;
}

Poly integrand_numerator(const Poly& T, int m, int p, const BigInt& a, int d) {
    if (!(0 < p && p < m)) throw std::domain_error("integrand_numerator: requires 0 < p < m");
    if (a.is_zero()) throw std::domain_error("integrand_numerator: a must be nonzero");
    Poly w = Poly::monomial(p).pow(1) * Poly{Rational(1), Rational(-1)}.pow(static_cast<unsigned>(m - p));
    Rational ra(a);
    Poly P;
    for (int j = 0; j <= T.degree(); ++j) {
        if (T.coeff(j).is_zero()) continue;
        P += w.pow(static_cast<unsigned>(j)).scaled(T.coeff(j) * ra.pow(d + 2 - j));
    }
    if ((d + 2) % 2 != 0) P = -P;
    return P;
}

std::vector<BigInt> constraint_coeffs(int k, int weight_mult) {
    if (k < 1) throw std::domain_error("constraint_coeffs: k must be >= 1");
    std::vector<BigInt> y;
    y.reserve(static_cast<std::size_t>(4 * k) + 2);
    for (int l = 0; l <= 4 * k + 1; ++l) {
        BigInt v(l % 2 == 0 ? 1 : -1);
        for (int i = 1; i <= 4 * k + 1 - l; ++i) v *= BigInt(weight_mult * i * k - 1);
        for (int i = 1; i <= l - 1; ++i) v *= BigInt(weight_mult * i * k + 1);
        y.push_back(std::move(v));
    }
    return y;
}

ConstraintVector constraint_vector(int k) {
    return ConstraintVector{k, constraint_coeffs(k, 4)};
}

Rational ck1_eval(int k, const std::vector<Rational>& c) {
    if (k < 1) throw std::domain_error("ck1_eval: k must be >= 1");
    if (c.size() != static_cast<std::size_t>(4 * k + 2))
        throw std::domain_error("ck1_eval: expected 4k+2 coefficients");
    std::vector<BigInt> y = constraint_coeffs(k, 4);
    Rational out(0);
    for (std::size_t j = 0; j < c.size(); ++j) out += Rational(y[j]) * c[j];
    return out;
}

std::vector<Rational> s_to_c(int k, const std::vector<Rational>& s) {
    if (k < 1) throw std::domain_error("s_to_c: k must be >= 1");
    if (s.size() != static_cast<std::size_t>(4 * k + 1))
        throw std::domain_error("s_to_c: expected 4k+1 coefficients");
    auto sv = [&](int i) -> Rational {
        if (i < 0 || i > 4 * k) return Rational(0);
        return s[static_cast<std::size_t>(i)];
    };
    std::vector<Rational> c(static_cast<std::size_t>(4 * k) + 2);
    for (int j = 0; j <= 4 * k + 1; ++j) {
        c[static_cast<std::size_t>(j)] =
            Rational(4 * j * k + 1) * sv(4 * k - j) +
            Rational(4 * k * (4 * k - j + 2) - 1) * sv(4 * k - j + 1);
    }
    return c;
}

}  // namespace piser
