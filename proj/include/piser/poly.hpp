#pragma once

#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "piser/rational.hpp"

namespace piser {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree, canonical form (no trailing zero coefficients). The variable is
/// implicit; callers track whether it is n, x, y or z.
class Poly {
public:
    /// degree() of the zero polynomial.
    static constexpr int kNegInfDegree = std::numeric_limits<int>::min();

    Poly() = default;
    Poly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static Poly monomial(int degree, Rational coeff = Rational(1));
    static Poly constant(Rational c);

    int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    /// Coefficient of x^i (zero outside the stored range).
    const Rational& coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Rational& c) const;
    /// Multiply by x^k.
    Poly shifted(int k) const;
    Poly derivative() const;
    Poly pow(unsigned e) const;
    Rational eval(const Rational& x) const;

    /// Exact division; throws std::logic_error on a nonzero remainder, which
    /// always signals a construction bug in this codebase.
    static Poly div_exact(const Poly& num, const Poly& den);

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    /// Canonical display form "c0 + c1*n + c2*n^2 + ..." in the given variable.
    std::string to_string(const std::string& var = "n") const;

private:
    std::vector<Rational> c_;
    void trim();
};

}  // namespace piser
