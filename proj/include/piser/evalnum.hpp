#pragma once

#include "piser/binsplit.hpp"
#include "piser/fixed_dec.hpp"
#include "piser/formula.hpp"

namespace piser {

/// Smallest convergence ratio bound for F: beta = p^p (m-p)^(m-p) / (m^m |a|).
/// The series converges (geometrically) iff beta < 1.
Rational convergence_ratio(const Formula& F);

/// An index T such that sum_{n >= T} |S(n)| / (C(mn,pn) |a|^n) < 10^(-D-2),
/// from the bound C(mn, pn) >= (m^m / (p^p (m-p)^(m-p)))^n / (mn+1): each
/// term is at most (mn+1) |S|(n) beta^n, and for n >= T the step ratio is at
/// most ((T+1)/T)^(deg+2) beta < 1, so the tail is a dominated geometric sum.
/// The returned bound is verified with exact rational arithmetic.
/// Throws std::domain_error for divergent parameters.
std::int64_t terms_needed(const Formula& F, int D);

/// Series value to scale D: exact binary splitting over [0, terms_needed),
/// a single final rounding of the exact partial sum (error <= 1/2 10^-D from
/// rounding plus < 10^(-D-2) from the tail).
FixedDec eval_formula(const Formula& F, int D);

/// pi to D digits from 16 arctan(1/5) - 4 arctan(1/239) by binary splitting;
/// deliberately shares no machinery with any cataloged series. Memoized to
/// the largest D computed; safe for concurrent callers.
FixedDec pi_reference(int D);

struct NumericReport {
    bool pass = false;
    FixedDec residual;  // |eval - reference| at scale D
};

/// pass iff |eval_formula(F, D) - pi_reference(D)| < 10^(-D+5).
NumericReport verify_formula_numeric(const Formula& F, int D);

/// Digit-file rendering: "3." then the fractional digits in blocks of 10,
/// line breaks every 50 digits.
std::string format_digits(const FixedDec& v);

}  // namespace piser
