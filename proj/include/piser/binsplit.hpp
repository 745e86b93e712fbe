#pragma once

#include <cstdint>
#include <functional>

#include "piser/formula.hpp"
#include "piser/rational.hpp"

namespace piser {

/// Exact partial sum as a fraction in range-product form.
struct SplitPair {
    BigInt num;
    BigInt den;
    Rational value() const { return Rational(num, den); }
};

/// Term description for binary splitting of sums of the shape
///   sum_n  cnum(n)/cden(n) * prod_{u < n} pnum(u)/pden(u).
/// All four pieces are integers, which keeps every accumulator integral; the
/// combination is associative, so results are schedule-independent.
struct SplitSeries {
    std::function<BigInt(std::int64_t)> cnum;
    std::function<BigInt(std::int64_t)> cden;
    std::function<BigInt(std::int64_t)> pnum;
    std::function<BigInt(std::int64_t)> pden;
};

/// Exact sum over [n0, n1) by divide and conquer (n1 > n0).
SplitPair split_sum(const SplitSeries& s, std::int64_t n0, std::int64_t n1);

/// The series of F (without the leading 1/r): terms S(n) / (C(mn, pn) a^n).
/// The consecutive-term weight ratio is the exact hypergeometric-style
///   prod_{i=1..p}(pn+i) prod_{i=1..m-p}((m-p)n+i) / ( a prod_{i=1..m}(mn+i) ).
SplitSeries formula_series(const Formula& F);

/// Exact partial sum sum_{n=n0}^{n1-1} S(n)/(C(mn,pn) a^n), range-product form.
SplitPair formula_partial_sum(const Formula& F, std::int64_t n0, std::int64_t n1);

/// arctan(1/x) for integer x >= 2, exact to the stated number of terms:
/// returns the partial sum of sum_n (-1)^n / ((2n+1) x^(2n+1)) over [0, terms).
Rational arctan_inv_partial(std::int64_t x, std::int64_t terms);

}  // namespace piser
