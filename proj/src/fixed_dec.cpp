#include "piser/fixed_dec.hpp"

#include <stdexcept>

namespace piser {

Rational FixedDec::to_rational() const {
    return Rational(mantissa, BigInt::pow10(scale));
}

std::string FixedDec::to_string() const {
    if (scale == 0) return mantissa.to_string();
    std::string digits = mantissa.abs().to_string();
    if (static_cast<int>(digits.size()) <= scale)
        digits.insert(0, static_cast<std::size_t>(scale) - digits.size() + 1, '0');
    digits.insert(digits.size() - static_cast<std::size_t>(scale), 1, '.');
    if (mantissa.sign() < 0) digits.insert(0, 1, '-');
    return digits;
}

FixedDec FixedDec::parse(const std::string& s) {
    auto dot = s.find('.');
    if (dot == std::string::npos) return FixedDec(BigInt::parse(s), 0);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    return FixedDec(BigInt::parse(digits), static_cast<int>(s.size() - dot - 1));
}

FixedDec FixedDec::rescaled(int new_scale) const {
    if (new_scale < scale) throw std::domain_error("FixedDec::rescaled: would drop digits");
    return FixedDec(mantissa * BigInt::pow10(new_scale - scale), new_scale);
}

FixedDec operator-(const FixedDec& a, const FixedDec& b) {
    int s = std::max(a.scale, b.scale);
    return FixedDec(a.rescaled(s).mantissa - b.rescaled(s).mantissa, s);
}

FixedDec operator+(const FixedDec& a, const FixedDec& b) {
    int s = std::max(a.scale, b.scale);
    return FixedDec(a.rescaled(s).mantissa + b.rescaled(s).mantissa, s);
}

int FixedDec::cmp(const FixedDec& a, const FixedDec& b) {
    int s = std::max(a.scale, b.scale);
    return BigInt::cmp(a.rescaled(s).mantissa, b.rescaled(s).mantissa);
}

bool FixedDec::abs_less_than_pow10(int e) const {
    // |m| 10^(-scale) < 10^(-e)  <=>  |m| 10^e < 10^scale (signs of e handled by moving powers)
    if (e >= 0) {
        if (e <= scale) return mantissa.abs() * BigInt::pow10(e) < BigInt::pow10(scale);
        return mantissa.abs() * BigInt::pow10(e - scale) < BigInt(1);
    }
    return mantissa.abs() < BigInt::pow10(scale - e);
}

FixedDec to_fixed(const Rational& q, int D) {
    if (D < 0) throw std::domain_error("to_fixed: negative scale");
    BigInt t = q.num().abs() * BigInt::pow10(D);
    BigInt quot, rem;
    BigInt::divmod(t, q.den(), quot, rem);
    if (rem + rem >= q.den()) quot += BigInt(1);  // half rounds away from zero
    if (q.sign() < 0) quot = -quot;
    return FixedDec(std::move(quot), D);
}

}  // namespace piser
