#include "piser/prover.hpp"

#include <stdexcept>
#include <string>

namespace piser::prover {

namespace {

Rational f0(const ProverContext& ctx, int j) { return Rational(ctx.a) * Rational(j); }
Rational f1(const ProverContext& ctx, int j) { return Rational(ctx.a) * Rational(-(4 * j + 2)); }
Rational g0(const ProverContext& ctx, int j) { return Rational(ctx.N - j); }
Rational g1(const ProverContext& ctx, int j) { return Rational(-(4 * ctx.N - 4 * j - 2)); }

// Coefficient vectors of the P-block columns, keyed by the residual row
// z^(4kj) they land in. For the monomial parameterization column u carries
// -T^(u)_j a^(4k+2-j) where T^(u) is the gf numerator of (8kn+1) n^u; for the
// constrained parameterization column j carries +(-4)^(-jk) in row z^(4kj).
std::vector<std::vector<Rational>> p_block_columns(const ProverContext& ctx, Parameterization param) {
    int slots = 4 * ctx.k + 2;  // rows z^(4kj), j = 0..4k+1
    int npar = param == Parameterization::monomial ? 4 * ctx.k + 1 : 4 * ctx.k + 2;
    std::vector<std::vector<Rational>> by_slot(static_cast<std::size_t>(slots),
                                               std::vector<Rational>(static_cast<std::size_t>(npar), Rational(0)));
    if (param == Parameterization::monomial) {
        Rational ra(ctx.a);
        for (int u = 0; u <= 4 * ctx.k; ++u) {
            Poly T = gf_numerator_with_degree(Poly::monomial(u), 8 * ctx.k, ctx.d);
            for (int j = 0; j <= T.degree(); ++j) {
                if (T.coeff(j).is_zero()) continue;
                by_slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)] =
                    -(T.coeff(j) * ra.pow(ctx.d + 2 - j));
            }
        }
    } else {
        for (int j = 0; j <= 4 * ctx.k + 1; ++j)
            by_slot[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] =
                Rational(BigInt(1), ctx.a.pow(static_cast<unsigned>(j)));
    }
    return by_slot;
}

Poly series_from_constrained(const ProverContext& ctx, const std::vector<Rational>& c) {
    // With the +(-4)^(-jk) column convention the solved c's are the negated
    // numerator coefficients, and the coefficient polynomial of their
    // generating function is -(8kn+1) S(n) a^(4k+2).
    Poly h = series_coefficient_poly(Poly(c), 4 * ctx.k + 2);
    Poly S = Poly::div_exact(h, Poly{Rational(1), Rational(8 * ctx.k)});
    return S.scaled(Rational(BigInt(-1), ctx.a.pow(static_cast<unsigned>(ctx.d) + 2)));
}

}  // namespace

ProverContext make_context(int k) {
    if (k < 1) throw std::domain_error("make_context: k must be >= 1");
    ProverContext ctx;
    ctx.k = k;
    ctx.N = 4 * k * (4 * k + 1);
    ctx.d = 4 * k;
    ctx.a = BigInt(-4).pow(static_cast<unsigned>(k));
    ctx.Q = Poly::monomial(4 * k) - Poly::constant(Rational(ctx.a));
    // Q is divisible by z^4 + 4 = (z^2-2z+2)(z^2+2z+2); the source term
    // construction depends on it.
    Poly::div_exact(ctx.Q, Poly{Rational(4), Rational(0), Rational(0), Rational(0), Rational(1)});
    return ctx;
}

Poly source_term(const ProverContext& ctx) {
    Poly Qpow = ctx.Q.pow(static_cast<unsigned>(4 * ctx.k + 2));
    Poly quot = Poly::div_exact(Qpow, Poly{Rational(2), Rational(-2), Rational(1)});
    return (Poly{Rational(3), Rational(-2)} * quot).scaled(Rational(2));
}

Poly ode_residual(const ProverContext& ctx, const Poly& Rcheck, const Poly& P) {
    Poly one_m4z{Rational(1), Rational(-4)};
    Poly t1 = -(one_m4z * ctx.Q * Rcheck.derivative());
    Poly op = ctx.Q.scaled(Rational(2)) +
              (one_m4z * Poly::monomial(4 * ctx.k - 1)).scaled(Rational(ctx.N));
    return t1 + op * Rcheck - P + source_term(ctx);
}

Poly series_integrand_z(const ProverContext& ctx, const Poly& S) {
    Poly T = gf_numerator_with_degree(S, 8 * ctx.k, ctx.d);
    Rational ra(ctx.a);
    Poly P;
    for (int j = 0; j <= T.degree(); ++j) {
        if (T.coeff(j).is_zero()) continue;
        P += Poly::monomial(4 * ctx.k * j).scaled(T.coeff(j) * ra.pow(ctx.d + 2 - j));
    }
    return P;
}

LinearSystem linearize(const ProverContext& ctx, Parameterization param) {
    const int N = ctx.N, k = ctx.k;
    const bool constrained = param == Parameterization::constrained;
    const int nresid = N + 4 * k;            // residual rows z^0 .. z^(N+4k-1)
    const int n = nresid + (constrained ? 1 : 0);
    const int npar = constrained ? 4 * k + 2 : 4 * k + 1;
    LinearSystem out;
    out.matrix = MatrixQ(n, n, constrained ? "M" : "A");
    out.rhs.assign(static_cast<std::size_t>(n), Rational(0));
    const int base = constrained ? 1 : 0;  // first residual row index
    auto& M = out.matrix;

    M.row_labels.resize(static_cast<std::size_t>(n));
    M.col_labels.resize(static_cast<std::size_t>(n));
    if (constrained) M.row_labels[0] = "norm";
    for (int i = 0; i < nresid; ++i)
        M.row_labels[static_cast<std::size_t>(base + i)] = "z^" + std::to_string(i);
    for (int j = 1; j < N; ++j) M.col_labels[static_cast<std::size_t>(j - 1)] = "a(" + std::to_string(j) + ")";
    for (int u = 0; u < npar; ++u)
        M.col_labels[static_cast<std::size_t>(N - 1 + u)] =
            (constrained ? "c" : "s") + std::to_string(u);

    // Rcheck block: column a(j) hits rows z^(j-1), z^j, z^(4k+j-1), z^(4k+j).
    for (int j = 1; j < N; ++j) {
        M.at(base + j - 1, j - 1) = f0(ctx, j);
        if (j < nresid) M.at(base + j, j - 1) = f1(ctx, j);
        if (4 * k + j - 1 < nresid) M.at(base + 4 * k + j - 1, j - 1) = g0(ctx, j);
        if (4 * k + j < nresid) M.at(base + 4 * k + j, j - 1) = g1(ctx, j);
    }
    // P block.
    auto pcols = p_block_columns(ctx, param);
    for (int j = 0; j <= 4 * k + 1; ++j) {
        int row = base + 4 * k * j;
        for (int u = 0; u < npar; ++u) {
            const Rational& v = pcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
            if (!v.is_zero()) M.at(row, N - 1 + u) = v;
        }
    }
    if (constrained) {
        std::vector<BigInt> y = constraint_coeffs(k, 8);
        for (int j = 0; j <= 4 * k + 1; ++j) M.at(0, N - 1 + j) = Rational(y[static_cast<std::size_t>(j)]);
    }
    Poly src = source_term(ctx);
    for (int i = 0; i < nresid; ++i) out.rhs[static_cast<std::size_t>(base + i)] = -src.coeff(i);
    return out;
}

namespace {

// Forward-substitution core shared by the solver and the determinant: every
// a(j) is expressed affinely in the P-block unknowns using the rows
// z^0..z^(N-2) (whose a-block is lower triangular with diagonal f0), and the
// remaining rows collapse to a small dense system over those unknowns.
struct MarchResult {
    std::vector<std::vector<Rational>> aform;  // j -> npar coeffs + constant
    MatrixQ small;
    std::vector<Rational> small_rhs;
    int npar = 0;
};

MarchResult march(const ProverContext& ctx, Parameterization param) {
    const int N = ctx.N, k = ctx.k;
    const bool constrained = param == Parameterization::constrained;
    MarchResult out;
    out.npar = constrained ? 4 * k + 2 : 4 * k + 1;
    const int npar = out.npar;
    auto pcols = p_block_columns(ctx, param);
    Poly src = source_term(ctx);
    out.aform.assign(static_cast<std::size_t>(N), {});

    auto row_accumulate = [&](int i) {
        std::vector<Rational> vec(static_cast<std::size_t>(npar) + 1, Rational(0));
        auto add_form = [&](int j, const Rational& c) {
            if (j < 1 || j > N - 1 || c.is_zero()) return;
            const auto& f = out.aform[static_cast<std::size_t>(j)];
            for (int u = 0; u <= npar; ++u)
                if (!f[static_cast<std::size_t>(u)].is_zero())
                    vec[static_cast<std::size_t>(u)] += c * f[static_cast<std::size_t>(u)];
        };
        add_form(i, f1(ctx, i));
        add_form(i + 1 - 4 * k, g0(ctx, i + 1 - 4 * k));
        add_form(i - 4 * k, g1(ctx, i - 4 * k));
        if (i % (4 * k) == 0) {
            int j = i / (4 * k);
            if (j <= 4 * k + 1) {
                for (int u = 0; u < npar; ++u)
                    vec[static_cast<std::size_t>(u)] += pcols[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
            }
        }
        return vec;
    };

    for (int i = 0; i <= N - 2; ++i) {
        std::vector<Rational> vec = row_accumulate(i);
        Rational rhs_i = -src.coeff(i);
        Rational piv = f0(ctx, i + 1);
        std::vector<Rational> form(static_cast<std::size_t>(npar) + 1, Rational(0));
        for (int u = 0; u < npar; ++u) form[static_cast<std::size_t>(u)] = -vec[static_cast<std::size_t>(u)] / piv;
        form[static_cast<std::size_t>(npar)] = (rhs_i - vec[static_cast<std::size_t>(npar)]) / piv;
        out.aform[static_cast<std::size_t>(i + 1)] = std::move(form);
    }

    int nsmall = npar;
    out.small = MatrixQ(nsmall, nsmall, "schur");
    out.small_rhs.assign(static_cast<std::size_t>(nsmall), Rational(0));
    int r = 0;
    if (constrained) {
        std::vector<BigInt> y = constraint_coeffs(k, 8);
        for (int j = 0; j <= 4 * k + 1; ++j) out.small.at(0, j) = Rational(y[static_cast<std::size_t>(j)]);
        out.small_rhs[0] = Rational(0);
        r = 1;
    }
    for (int i = N - 1; i <= N + 4 * k - 1; ++i, ++r) {
        std::vector<Rational> vec = row_accumulate(i);
        for (int u = 0; u < npar; ++u) out.small.at(r, u) = vec[static_cast<std::size_t>(u)];
        out.small_rhs[static_cast<std::size_t>(r)] = -src.coeff(i) - vec[static_cast<std::size_t>(npar)];
    }
    return out;
}

}  // namespace

SeriesSolution solve_series_system(const ProverContext& ctx, Parameterization param) {
    MarchResult m = march(ctx, param);
    std::vector<Rational> psol = solve_exact(m.small, m.small_rhs);
    SeriesSolution out;
    out.raw = psol;
    std::vector<Rational> rc(static_cast<std::size_t>(ctx.N), Rational(0));
    for (int j = 1; j <= ctx.N - 1; ++j) {
        const auto& f = m.aform[static_cast<std::size_t>(j)];
        Rational v = f[static_cast<std::size_t>(m.npar)];
        for (int u = 0; u < m.npar; ++u) v += f[static_cast<std::size_t>(u)] * psol[static_cast<std::size_t>(u)];
        rc[static_cast<std::size_t>(j)] = v;
    }
    out.Rcheck = Poly(std::move(rc));
    out.S = param == Parameterization::monomial ? Poly(psol) : series_from_constrained(ctx, psol);
    return out;
}

Rational det_series_system(const ProverContext& ctx, Parameterization param) {
    MarchResult m = march(ctx, param);
    Rational det = det_structured(m.small);
    for (int j = 1; j <= ctx.N - 1; ++j) det *= f0(ctx, j);
    // In the constrained ordering the normalization row precedes the N-1
    // pivot rows, so restoring block order costs (-1)^(N-1).
    if (param == Parameterization::constrained && (ctx.N - 1) % 2 != 0) det = -det;
    return det;
}

ProofCertificate prove(int k) {
    ProverContext ctx = make_context(k);
    SeriesSolution sol = solve_series_system(ctx, Parameterization::monomial);
    ProofCertificate cert;
    cert.k = k;
    cert.S = sol.S;
    cert.Rcheck = sol.Rcheck;
    cert.r = BigInt(1);
    for (const Rational& c : sol.S.coeffs()) cert.r = lcm(cert.r, c.den());
    for (const Rational& c : sol.S.coeffs())
        cert.S_int.push_back(c.num() * BigInt::div_exact(cert.r, c.den()));
    Poly P = series_integrand_z(ctx, sol.S);
    cert.residual_zero = ode_residual(ctx, sol.Rcheck, P).is_zero();
    return cert;
}

BigInt det_A_closed_form(int k) {
    if (k < 1) throw std::domain_error("det_A_closed_form: k must be >= 1");
    unsigned e2 = static_cast<unsigned>(32 * k * k * k + 32 * k * k + 2 * k - 1);
    BigInt out = BigInt(2).pow(e2);
    out *= BigInt(k).pow(static_cast<unsigned>(8 * k * k + 2 * k));
    out *= factorial(4 * k + 1).pow(static_cast<unsigned>(4 * k));
    out *= BigInt::div_exact(factorial(8 * k), factorial(4 * k));
    for (int j = 1; j <= 4 * k; ++j) out *= BigInt::div_exact(factorial(2 * j), factorial(j));
    if (k % 2 == 0) out = -out;
    return out;
}

}  // namespace piser::prover
