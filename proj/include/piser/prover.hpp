#pragma once

#include <vector>

#include "piser/matrix.hpp"
#include "piser/poly.hpp"
#include "piser/polyring.hpp"

namespace piser::prover {

/// Working data for the symmetric family m = 8k, p = 4k, a = (-4)^k.
/// Everything is expressed in z = x(1-x); Q = z^(4k) - (-4)^k.
struct ProverContext {
    int k = 0;
    int N = 0;   // 4k(4k+1): one more than the top degree of the Rcheck ansatz
    int d = 0;   // 4k, the degree of the series polynomial S
    BigInt a;    // (-4)^k
    Poly Q;      // in z
};

/// Validates k >= 1 and the divisibility of Q by z^4 + 4 (an exact-division
/// check; failure would be a construction bug).
ProverContext make_context(int k);

/// 2 (3-2z) Q^(4k+2) / (z^2 - 2z + 2), exact in z.
Poly source_term(const ProverContext& ctx);

/// -(1-4z) Q Rcheck' + (2Q + 4k(4k+1)(1-4z) z^(4k-1)) Rcheck - P + source_term.
/// The proof certificate is exactly a pair (Rcheck, P-from-S) making this the
/// zero polynomial.
Poly ode_residual(const ProverContext& ctx, const Poly& Rcheck, const Poly& P);

/// Integrand numerator in z for the series polynomial S:
/// P(z) = sum_j T_j a^(4k+2-j) z^(4kj) with T = gf numerator of (8kn+1) S(n)
/// taken at denominator degree 4k+2.
Poly series_integrand_z(const ProverContext& ctx, const Poly& S);

enum class Parameterization { monomial, constrained };

struct LinearSystem {
    MatrixQ matrix;
    std::vector<Rational> rhs;
};

/// Builds the linear system whose solution is the proof certificate.
///
/// monomial: square of size N+4k over a(1..N-1) and the monomial coefficients
/// of S; rows are the residual coefficients of z^0, z^1, ...
///
/// constrained: square of size N+4k+1 over a(1..N-1) and the 4k+2 numerator
/// coefficients c_j (P enters as sum_j c_j z^(4jk) / (-4)^(jk)); row 0 is the
/// normalization row and rows 1.. are the residual coefficients. The
/// normalization row uses the products matched to the series weight (8kn+1),
/// which is what makes the solved c's reproduce the same S as the monomial
/// route; the reference constraint vector (see polyring) differs only there.
LinearSystem linearize(const ProverContext& ctx, Parameterization param);

struct SeriesSolution {
    Poly Rcheck;                 // in z, zero constant term
    Poly S;                      // in n
    std::vector<Rational> raw;   // the P-block unknowns as solved
};

/// Solves the series system exactly. Uses the band structure of the Rcheck
/// block (forward substitution expressing every a(j) affinely in the few
/// P-block unknowns) instead of dense elimination, which keeps k = 4 cheap.
SeriesSolution solve_series_system(const ProverContext& ctx, Parameterization param);

/// Exact determinant of linearize(ctx, param).matrix through the same band
/// structure: the a-block is lower triangular with diagonal j(-4)^k, so the
/// determinant is the product of that diagonal times the determinant of the
/// small Schur complement on the P-block unknowns.
Rational det_series_system(const ProverContext& ctx, Parameterization param);

/// Machine-checkable proof object: checking it requires only polynomial
/// arithmetic (ode_residual of the stored pair is identically zero).
struct ProofCertificate {
    int k = 0;
    Poly S;                       // rational coefficients, degree 4k
    BigInt r;                     // least common denominator of S's coefficients
    std::vector<BigInt> S_int;    // r * S, ascending
    Poly Rcheck;                  // in z, degree <= N-1, zero constant term
    bool residual_zero = false;
};

/// Solves the monomial system for the given k and assembles the certificate.
/// The normalization is pinned by the linear system itself, so the resulting
/// series sums to pi exactly (subject to the numeric certification done by
/// the evaluation layer). Throws on k < 1; singular systems surface as
/// SingularSystemError.
ProofCertificate prove(int k);

/// Closed-form value of the determinant of the monomial system:
/// (-1)^(k-1) 2^(32k^3+32k^2+2k-1) k^(8k^2+2k) ((4k+1)!)^(4k)
///   * (8k)!/(4k)! * prod_{j=1..4k} (2j)!/j!
BigInt det_A_closed_form(int k);

}  // namespace piser::prover
