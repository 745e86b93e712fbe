#include "piser/detlab.hpp"

#include <random>
#include <stdexcept>

namespace piser::detlab {

namespace {

// Shared grid: row 0, then 4k+1 bands of 4k-1 rows; the f-block of band b
// sits in column group b (b <= 4k), the g-block in group b-1 (b >= 2). Each
// block row t carries its two entries at local columns t and t+1.
template <typename F0, typename F1, typename G0, typename G1>
MatrixQ build_grid(int k, const char* kind, F0 f0, F1 f1, G0 g0, G1 g1) {
    int n = 16 * k * k;
    MatrixQ M(n, n, kind);
    M.row_labels.resize(static_cast<std::size_t>(n));
    M.col_labels.resize(static_cast<std::size_t>(n));
    M.row_labels[0] = "top";
    for (int i = 1; i < n; ++i)
        M.row_labels[static_cast<std::size_t>(i)] =
            "b" + std::to_string(1 + (i - 1) / (4 * k - 1)) + "." + std::to_string(1 + (i - 1) % (4 * k - 1));
    for (int j = 0; j < n; ++j) M.col_labels[static_cast<std::size_t>(j)] = "g" + std::to_string(1 + j / (4 * k)) + "." + std::to_string(1 + j % (4 * k));
    for (int l = 1; l <= 4 * k; ++l) M.at(0, 4 * l * k - 1) = top_row_entry(k, l);
    int row = 1;
    for (int b = 1; b <= 4 * k + 1; ++b) {
        for (int t = 1; t <= 4 * k - 1; ++t, ++row) {
            if (b <= 4 * k) {
                int j = 4 * (b - 1) * k + t;
                M.at(row, j - 1) += f1(t, j);
                M.at(row, j) += f0(t, j + 1);
            }
            if (b >= 2) {
                int j = 4 * (b - 2) * k + t;
                M.at(row, j - 1) += g1(t, j);
                M.at(row, j) += g0(t, j + 1);
            }
        }
    }
    return M;
}

void require_lists(const std::vector<Rational>& v, int k, const char* what) {
    if (v.size() != static_cast<std::size_t>(4 * k - 1))
        throw std::domain_error(std::string("ParamPoint: ") + what + " must have 4k-1 entries");
}

}  // namespace

Rational top_row_entry(int k, int l) {
    Rational out = Rational(BigInt(-4).pow(static_cast<unsigned>((l + 1) * k)));
    if (l % 2 == 0) out = -out;
    out *= Rational(8 * k * (4 * k + 1));
    for (int i = 1; i <= 4 * k - l; ++i) out *= Rational(4 * i * k - 1);
    for (int i = 1; i <= l - 1; ++i) out *= Rational(4 * i * k + 1);
    return out;
}

MatrixQ build_MX(const ParamPoint& pt) {
    int k = pt.k;
    require_lists(pt.X1, k, "X1");
    require_lists(pt.X2, k, "X2");
    require_lists(pt.Y, k, "Y");
    int N = 4 * k * (4 * k + 1);
    Rational a(BigInt(-4).pow(static_cast<unsigned>(k)));
    auto X1 = [&](int t) { return pt.X1[static_cast<std::size_t>(t) - 1]; };
    auto X2 = [&](int t) { return pt.X2[static_cast<std::size_t>(t) - 1]; };
    auto Y = [&](int t) { return pt.Y[static_cast<std::size_t>(t) - 1]; };
    return build_grid(
        k, "MX",
        [&](int t, int j) { return (Rational(N + j) * Y(t) - X2(t)) * a; },
        [&](int t, int j) { return -(Rational(4 * N + 4 * j + 2) * Y(t) - Rational(4) * X1(t)) * a; },
        [&](int t, int j) { return X2(t) - Rational(j) * Y(t); },
        [&](int t, int j) { return -(Rational(4) * X1(t) - Rational(4 * j + 2) * Y(t)); });
}

Rational thm2_rhs(const ParamPoint& pt) {
    int k = pt.k;
    require_lists(pt.X1, k, "X1");
    require_lists(pt.X2, k, "X2");
    require_lists(pt.Y, k, "Y");
    Rational out(BigInt(4).pow(static_cast<unsigned>(2 * k * (4 * k * k + 7 * k + 2))));
    if (k % 2 == 0) out = -out;
    out *= Rational(BigInt(k).pow(static_cast<unsigned>(2 * k * (4 * k + 1))));
    for (int i = 1; i <= 4 * k; ++i)
        out *= shifted_factorial(Rational(i + 1), static_cast<unsigned>(4 * k - i + 1));
    for (int a = 1; a <= 4 * k - 1; ++a) {
        out *= Rational(2) * pt.X1[static_cast<std::size_t>(a) - 1] -
               Rational(32 * k * k + 2 * a - 1) * pt.Y[static_cast<std::size_t>(a) - 1];
    }
    for (int a = 1; a <= 4 * k - 1; ++a) {
        for (int b = a; b <= 4 * k - 1; ++b) {
            const Rational& Ya = pt.Y[static_cast<std::size_t>(a) - 1];
            const Rational& Yb = pt.Y[static_cast<std::size_t>(b) - 1];
            out *= Rational(2) * pt.X2[static_cast<std::size_t>(b) - 1] * Ya -
                   Rational(2) * pt.X1[static_cast<std::size_t>(a) - 1] * Yb -
                   Rational(2 * b - 2 * a + 1) * Ya * Yb;
        }
    }
    return out;
}

MatrixQ build_MZ(const ParamPoint& pt) {
    int k = pt.k;
    require_lists(pt.X, k, "X");
    require_lists(pt.Z, k, "Z");
    Rational a(BigInt(-4).pow(static_cast<unsigned>(k)));
    auto X = [&](int t) { return pt.X[static_cast<std::size_t>(t) - 1]; };
    auto Z = [&](int t) { return pt.Z[static_cast<std::size_t>(t) - 1]; };
    return build_grid(
        k, "MZ",
        [&](int t, int j) { return (Z(t) + Rational(j)) * a; },
        [&](int t, int j) { (void)j; return Rational(4) * a * X(t); },
        [&](int t, int j) { (void)t; return Rational(-j); },
        [&](int t, int j) { (void)j; return Rational(-4) * X(t); });
}

Rational lemma7_rhs(const ParamPoint& pt) {
    int k = pt.k;
    require_lists(pt.X, k, "X");
    require_lists(pt.Z, k, "Z");
    Rational out(BigInt(2).pow(static_cast<unsigned>(16 * k * k * k + 20 * k * k + 14 * k - 1)));
    if (k % 2 == 0) out = -out;
    out *= Rational(BigInt(k).pow(static_cast<unsigned>(4 * k)));
    out *= Rational(factorial(4 * k + 1));
    for (int a = 1; a <= 4 * k - 1; ++a) {
        out *= pt.X[static_cast<std::size_t>(a) - 1].pow(4 * k + 1 - a);
        for (int b = 0; b <= a - 1; ++b)
            out *= pt.Z[static_cast<std::size_t>(a) - 1] - Rational(4 * b * k);
    }
    return out;
}

ChainReport reduce_chain(int k) {
    if (k != 1 && k != 2) throw std::domain_error("reduce_chain: supported for k in {1, 2}");
    ChainReport rep;
    rep.k = k;
    prover::ProverContext ctx = prover::make_context(k);
    const int N = ctx.N;
    const int n = N + 4 * k + 1;
    MatrixQ M = prover::linearize(ctx, prover::Parameterization::constrained).matrix;
    ConstraintVector ref = constraint_vector(k);
    for (int j = 0; j < n; ++j) M.at(0, j) = Rational(0);
    for (int j = 0; j <= 4 * k + 1; ++j) M.at(0, N - 1 + j) = Rational(ref.y[static_cast<std::size_t>(j)]);
    rep.det_M = det_structured(M);
    rep.det_nonzero = !rep.det_M.is_zero();

    // Eliminate the constraint entries of row 0 with the rows carrying the
    // single P-block entries (matrix row 1 + 4lk holds the z^(4lk) residual).
    std::vector<Rational> r0(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) r0[static_cast<std::size_t>(j)] = M.at(0, j);
    for (int l = 0; l <= 4 * k + 1; ++l) {
        Rational fac = Rational(ref.y[static_cast<std::size_t>(l)]) *
                       Rational(BigInt(-4).pow(static_cast<unsigned>(l * k)));
        int src_row = 1 + 4 * l * k;
        for (int j = 0; j < n; ++j) r0[static_cast<std::size_t>(j)] -= fac * M.at(src_row, j);
    }
    rep.miracle_ok = true;
    for (int l = 0; l <= 4 * k - 1; ++l)
        if (!r0[static_cast<std::size_t>(4 * l * k)].is_zero()) rep.miracle_ok = false;
    rep.row0_values_ok = true;
    for (int j = 0; j <= 4 * k + 1; ++j)
        if (!r0[static_cast<std::size_t>(N - 1 + j)].is_zero()) rep.row0_values_ok = false;
    for (int l = 1; l <= 4 * k; ++l)
        if (r0[static_cast<std::size_t>(4 * l * k) - 1] != top_row_entry(k, l)) rep.row0_values_ok = false;
    for (int c = 0; c < N - 1; ++c) {
        bool expected_nonzero = (c + 1) % (4 * k) == 0;
        if (!expected_nonzero && !r0[static_cast<std::size_t>(c)].is_zero()) rep.row0_values_ok = false;
    }

    // M'': drop the rows used above and the P-block columns; row 0 becomes
    // the eliminated row restricted to the a-columns.
    MatrixQ Mpp(N - 1, N - 1, "M''");
    for (int j = 0; j < N - 1; ++j) Mpp.at(0, j) = r0[static_cast<std::size_t>(j)];
    int out_row = 1;
    for (int i = 0; i <= N + 4 * k - 1; ++i) {
        if (i % (4 * k) == 0 && i / (4 * k) <= 4 * k + 1) continue;
        for (int j = 0; j < N - 1; ++j) Mpp.at(out_row, j) = M.at(1 + i, j);
        ++out_row;
    }
    rep.det_Mpp = det_structured(Mpp);

    Rational fac_b = Rational(BigInt(1), BigInt(-4).pow(static_cast<unsigned>(k * (2 * k + 1) * (4 * k + 1))));
    Rational rhs_b = fac_b * rep.det_Mpp;
    rep.factor_ok = !rhs_b.is_zero() && rep.det_M.abs() == rhs_b.abs();
    rep.observed_sign = rep.factor_ok ? (rep.det_M == rhs_b ? 1 : -1) : 0;

    // M''': strip the final band and column group; the stripped block is
    // upper bidiagonal, so its diagonal product prod_g1 carries the ratio.
    rep.prod_g1 = Rational(1);
    for (int i = 16 * k * k + 1; i <= 16 * k * k + 4 * k - 1; ++i)
        rep.prod_g1 *= Rational(-(4 * N - 4 * i - 2));
    int m3 = 16 * k * k;
    MatrixQ Mppp(m3, m3, "M'''");
    for (int i = 0; i < m3; ++i)
        for (int j = 0; j < m3; ++j) Mppp.at(i, j) = Mpp.at(i, j);
    rep.det_Mppp = det_structured(Mppp);
    rep.triangular_ok = rep.det_Mpp == rep.prod_g1 * rep.det_Mppp;

    ParamPoint pt;
    pt.k = k;
    pt.X1.assign(static_cast<std::size_t>(4 * k) - 1, Rational(N));
    pt.X2 = pt.X1;
    pt.Y.assign(static_cast<std::size_t>(4 * k) - 1, Rational(1));
    rep.specialization_ok = Mppp == build_MX(pt);
    return rep;
}

std::string to_string(const ChainReport& r) {
    auto flag = [](bool b) { return b ? "ok" : "FAIL"; };
    std::string out;
    out += "chain k=" + std::to_string(r.k) + "\n";
    out += "  det M       = " + r.det_M.to_string() + (r.det_nonzero ? "  (nonzero ok)" : "  (FAIL: zero)") + "\n";
    out += "  row-0 zeros after elimination: " + std::string(flag(r.miracle_ok)) + "\n";
    out += "  row-0 surviving values:        " + std::string(flag(r.row0_values_ok)) + "\n";
    out += "  det M'' factor check:          " + std::string(flag(r.factor_ok)) +
           "  (observed sign " + std::to_string(r.observed_sign) + ")\n";
    out += "  det M'' = prod g1 * det M''':  " + std::string(flag(r.triangular_ok)) +
           "  (prod g1 = " + r.prod_g1.to_string() + ")\n";
    out += "  M''' equals specialized MX:    " + std::string(flag(r.specialization_ok)) + "\n";
    out += r.all_ok() ? "  all checks passed\n" : "  CHECKS FAILED\n";
    return out;
}

ParamPoint random_point(int k, std::uint64_t seed, int trial) {
    std::mt19937_64 rng(seed);
    rng.discard(static_cast<unsigned long long>(trial) * 1024);
    std::uniform_int_distribution<int> num(-10000, 10000);
    std::uniform_int_distribution<int> den(1, 10000);
    auto draw = [&] { return Rational(num(rng), den(rng)); };
    ParamPoint pt;
    pt.k = k;
    for (int i = 0; i < 4 * k - 1; ++i) {
        pt.X1.push_back(draw());
        pt.X2.push_back(draw());
        pt.Y.push_back(draw());
        pt.X.push_back(draw());
        pt.Z.push_back(draw());
    }
    return pt;
}

IdentityReport verify_identity(Identity which, int k, int trials, std::uint64_t seed) {
    if (trials < 1) throw std::domain_error("verify_identity: trials must be >= 1");
    IdentityReport rep;
    rep.which = which;
    rep.k = k;
    rep.trials = trials;
    rep.seed = seed;
    rep.all_match = true;
    for (int t = 0; t < trials; ++t) {
        ParamPoint pt = random_point(k, seed, t);
        bool match;
        if (which == Identity::thm2)
            match = det_structured(build_MX(pt)) == thm2_rhs(pt);
        else
            match = det_structured(build_MZ(pt)) == lemma7_rhs(pt);
        if (!match) {
            rep.all_match = false;
            rep.failed_trial = t;
            rep.failing_point = pt;
            break;
        }
    }
    return rep;
}

std::string to_string(const IdentityReport& r) {
    std::string name = r.which == Identity::thm2 ? "thm2" : "lemma7";
    std::string out = name + " k=" + std::to_string(r.k) + " seed=" + std::to_string(r.seed) + ": ";
    if (r.all_match) {
        out += std::to_string(r.trials) + "/" + std::to_string(r.trials) + " points match";
    } else {
        out += "MISMATCH at trial " + std::to_string(r.failed_trial);
    }
    return out;
}

}  // namespace piser::detlab
