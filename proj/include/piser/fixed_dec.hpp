#pragma once

#include <string>

#include "piser/rational.hpp"

namespace piser {

/// Fixed-point decimal: value = mantissa * 10^(-scale), scale >= 0.
///
/// The scale is explicit and carried through arithmetic; comparisons and
/// differences align scales exactly, so digit strings are reproducible.
struct FixedDec {
    BigInt mantissa;
    int scale = 0;

    FixedDec() = default;
    FixedDec(BigInt m, int s) : mantissa(std::move(m)), scale(s) {}

    Rational to_rational() const;
    /// Decimal rendering, e.g. "-3.14159", "0.00042", "17".
    std::string to_string() const;
    static FixedDec parse(const std::string& s);

    /// Same value re-expressed at a (not smaller) scale.
    FixedDec rescaled(int new_scale) const;

    friend FixedDec operator-(const FixedDec& a, const FixedDec& b);
    friend FixedDec operator+(const FixedDec& a, const FixedDec& b);
    FixedDec abs() const { return FixedDec(mantissa.abs(), scale); }

    static int cmp(const FixedDec& a, const FixedDec& b);
    friend bool operator==(const FixedDec& a, const FixedDec& b) { return cmp(a, b) == 0; }
    friend bool operator<(const FixedDec& a, const FixedDec& b) { return cmp(a, b) < 0; }

    /// |*this| < 10^(-e)?
    bool abs_less_than_pow10(int e) const;
};

/// Round q to scale D (round half away from zero); |result - q| <= (1/2) 10^(-D).
FixedDec to_fixed(const Rational& q, int D);

}  // namespace piser
