#pragma once

#include <vector>

#include "piser/poly.hpp"

namespace piser {

/// C(x + shift, K) evaluated as the degree-K polynomial in x at a rational
/// point (valid for negative arguments too).
Rational binomial_poly_at(const Rational& x, int shift, int K);

/// Expand S (deg <= d+1) in the binomial basis: returns a(0..d+1) with
/// S(n) = sum_j a(j) * C(n+j, d+1) as polynomials in n.
std::vector<Rational> binomial_basis_expand(const Poly& S, int d);

/// Numerator T of sum_{n>=0} (m n + 1) S(n) y^n = T(y) / (1-y)^(d+2) where
/// d = deg S; deg T <= d+1. S must be nonzero.
Poly gf_numerator(const Poly& S, int m);

/// Same with an explicit denominator degree d >= deg S (the expansion is
/// taken in the fixed basis C(n+j, d+1), so T has degree <= d+1).
Poly gf_numerator_with_degree(const Poly& S, int m, int d);

/// Coefficient polynomial h with sum_n h(n) y^n = T(y) / (1-y)^denom_exp,
/// i.e. h(n) = sum_j T_j * C(n - j + denom_exp - 1, denom_exp - 1).
Poly series_coefficient_poly(const Poly& T, int denom_exp);

/// Integrand numerator P with
///   T(y)/(1-y)^(d+2) = P(x) / (x^p (1-x)^(m-p) - a)^(d+2)
/// under y = x^p (1-x)^(m-p) / a. Requires 0 < p < m and a != 0.
Poly integrand_numerator(const Poly& T, int m, int p, const BigInt& a, int d);

/// Coefficients of the single linear constraint tying the 4k+2 series
/// numerator coefficients together: y_0 = prod_{i=1..4k+1}(w i k - 1) and
/// y_l = (-1)^l (prod_{i=1..4k+1-l}(w i k - 1)) (prod_{i=1..l-1}(w i k + 1)).
/// Annihilating this functional is equivalent to the coefficient polynomial
/// of T(y)/(1-y)^(4k+2) carrying the factor (w k n + 1).
std::vector<BigInt> constraint_coeffs(int k, int weight_mult);

/// The reference constraint vector (weight multiplier 4).
struct ConstraintVector {
    int k = 0;
    std::vector<BigInt> y;  // y_0 .. y_{4k+1}
};
ConstraintVector constraint_vector(int k);

/// Left-hand side of the reference constraint applied to c (length 4k+2).
Rational ck1_eval(int k, const std::vector<Rational>& c);

/// Map from the binomial-basis coefficients s (length 4k+1) of S to the
/// numerator coefficients c (length 4k+2):
///   c_j = (4jk+1) s_{4k-j} + (4k(4k-j+2)-1) s_{4k-j+1},
/// with out-of-range s read as 0. By construction ck1_eval(k, s_to_c(k, s)) = 0.
std::vector<Rational> s_to_c(int k, const std::vector<Rational>& s);

}  // namespace piser
