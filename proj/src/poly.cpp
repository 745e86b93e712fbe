#include "piser/poly.hpp"

#include <stdexcept>

namespace piser {

namespace {
const Rational kZero(0);
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::monomial(int degree, Rational coeff) {
    if (degree < 0) throw std::domain_error("Poly::monomial: negative degree");
    if (coeff.is_zero()) return Poly();
    std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
    c.back() = std::move(coeff);
    return Poly(std::move(c));
}

Poly Poly::constant(Rational c) {
    return Poly(std::vector<Rational>{std::move(c)});
}

const Rational& Poly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<std::size_t>(i)];
}

Rational Poly::leading() const {
    if (c_.empty()) return Rational(0);
    return c_.back();
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return Poly(std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Rational> out(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] -= b.c_[i];
    return Poly(std::move(out));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (!b.c_[j].is_zero()) out[i + j] += a.c_[i] * b.c_[j];
        }
    }
    return Poly(std::move(out));
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& c : out.c_) c = -c;
    return out;
}

Poly Poly::scaled(const Rational& c) const {
    if (c.is_zero()) return Poly();
    Poly out = *this;
    for (auto& x : out.c_) x *= c;
    return out;
}

Poly Poly::shifted(int k) const {
    if (k < 0) throw std::domain_error("Poly::shifted: negative shift");
    if (is_zero()) return Poly();
    std::vector<Rational> out(static_cast<std::size_t>(k), Rational(0));
    out.insert(out.end(), c_.begin(), c_.end());
    return Poly(std::move(out));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * Rational(static_cast<std::int64_t>(i));
    return Poly(std::move(out));
}

Poly Poly::pow(unsigned e) const {
    Poly out = Poly::constant(Rational(1));
    Poly base = *this;
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

Rational Poly::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

Poly Poly::div_exact(const Poly& num, const Poly& den) {
    if (den.is_zero()) throw std::domain_error("Poly::div_exact: zero divisor");
    std::vector<Rational> rem = num.c_;
    int dn = static_cast<int>(rem.size()) - 1;
    int dd = den.degree();
    if (num.is_zero()) return Poly();
    if (dn < dd) throw std::logic_error("Poly::div_exact: nonzero remainder");
    std::vector<Rational> out(static_cast<std::size_t>(dn - dd) + 1, Rational(0));
    for (int i = dn; i >= dd; --i) {
        Rational c = rem[static_cast<std::size_t>(i)] / den.c_.back();
        out[static_cast<std::size_t>(i - dd)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(i - dd + j)] -= c * den.c_[static_cast<std::size_t>(j)];
    }
    for (const auto& c : rem)
        if (!c.is_zero()) throw std::logic_error("Poly::div_exact: nonzero remainder");
    return Poly(std::move(out));
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!out.empty()) out += " + ";
        out += c_[i].to_string();
        if (i >= 1) out += "*" + var;
        if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
}

}  // namespace piser
