#include "piser/discover.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "piser/matrix.hpp"

namespace piser::discover {

GaussInt GaussInt::pow(unsigned e) const {
    GaussInt out{BigInt(1), BigInt(0)};
    GaussInt base = *this;
    while (e > 0) {
        if (e & 1u) out = out * base;
        base = base * base;
        e >>= 1u;
    }
    return out;
}

GaussInt witness_value(int m, int p, WitnessRoot root) {
    GaussInt x, one_minus_x;
    if (root == WitnessRoot::at_i) {
        x = GaussInt{BigInt(0), BigInt(1)};
        one_minus_x = GaussInt{BigInt(1), BigInt(-1)};
    } else {
        x = GaussInt{BigInt(1), BigInt(1)};
        one_minus_x = GaussInt{BigInt(0), BigInt(-1)};
    }
    return x.pow(static_cast<unsigned>(p)) * one_minus_x.pow(static_cast<unsigned>(m - p));
}

std::vector<CandidateParams> enumerate_candidates(int max_m) {
    if (max_m < 3) throw std::domain_error("enumerate_candidates: max_m must be >= 3");
    std::vector<CandidateParams> out;
    std::set<std::tuple<int, int, std::string>> seen;
    for (int m = 2; m <= max_m; ++m) {
        for (int p = 1; p < m; ++p) {
            for (WitnessRoot root : {WitnessRoot::at_i, WitnessRoot::at_one_plus_i}) {
                GaussInt w = witness_value(m, p, root);
                if (!w.is_real() || w.re.is_zero()) continue;
                if (!seen.emplace(m, p, w.re.to_string()).second) continue;
                out.push_back(CandidateParams{m, p, w.re, root});
            }
        }
    }
    return out;
}

MomentVector moments(int m, int p, const BigInt& a, int jmax, int D) {
    if (jmax < 0 || D < 1) throw std::domain_error("moments: bad jmax or D");
    MomentVector mv;
    mv.m = m;
    mv.p = p;
    mv.a = a;
    mv.D = D;
    for (int j = 0; j <= jmax; ++j) {
        Formula F;
        F.m = m;
        F.p = p;
        F.a = a;
        F.r = BigInt(1);
        F.S_int.assign(static_cast<std::size_t>(j) + 1, BigInt(0));
        F.S_int.back() = BigInt(1);
        mv.values.push_back(eval_formula(F, D));
    }
    return mv;
}

namespace {

BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    if (!r.is_zero() && (r.sign() < 0) != (b.sign() < 0)) q -= BigInt(1);
    return q;
}

BigInt nearest_int(const Rational& q) {
    return floor_div(q.num() * BigInt(2) + q.den(), q.den() * BigInt(2));
}

struct Gso {
    std::vector<std::vector<Rational>> mu;
    std::vector<Rational> norm2;  // |b*_i|^2
};

Gso gram_schmidt(const std::vector<std::vector<BigInt>>& b) {
    std::size_t n = b.size(), dim = b[0].size();
    Gso g;
    g.mu.assign(n, std::vector<Rational>(n, Rational(0)));
    g.norm2.assign(n, Rational(0));
    std::vector<std::vector<Rational>> star(n, std::vector<Rational>(dim, Rational(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t d = 0; d < dim; ++d) star[i][d] = Rational(b[i][d]);
        for (std::size_t j = 0; j < i; ++j) {
            Rational dot(0);
            for (std::size_t d = 0; d < dim; ++d)
                if (!star[j][d].is_zero()) dot += Rational(b[i][d]) * star[j][d];
            if (g.norm2[j].is_zero()) throw std::domain_error("lll_reduce: dependent rows");
            g.mu[i][j] = dot / g.norm2[j];
            for (std::size_t d = 0; d < dim; ++d) star[i][d] -= g.mu[i][j] * star[j][d];
        }
        for (std::size_t d = 0; d < dim; ++d)
            if (!star[i][d].is_zero()) g.norm2[i] += star[i][d] * star[i][d];
        if (g.norm2[i].is_zero()) throw std::domain_error("lll_reduce: dependent rows");
    }
    return g;
}

Rational det_pm_one(const std::vector<std::vector<BigInt>>& u) {
    MatrixQ m(static_cast<int>(u.size()), static_cast<int>(u.size()), "transform");
    for (std::size_t i = 0; i < u.size(); ++i)
        for (std::size_t j = 0; j < u.size(); ++j) m.at(static_cast<int>(i), static_cast<int>(j)) = Rational(u[i][j]);
    return det_structured(m);
}

}  // namespace

LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta) {
    if (basis.rows.empty()) throw std::domain_error("lll_reduce: empty basis");
    if (!(Rational(1, 4) < delta && delta < Rational(1)))
        throw std::domain_error("lll_reduce: delta must be in (1/4, 1)");
    std::vector<std::vector<BigInt>> b = basis.rows;
    std::size_t n = b.size();
    // transform accumulator, to certify the output spans the same lattice
    std::vector<std::vector<BigInt>> u(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) u[i][i] = BigInt(1);

    // mu and norm2 are kept incrementally up to date; the Gram-Schmidt star
    // vectors themselves are never needed after initialization.
    Gso g = gram_schmidt(b);

    auto reduce_against = [&](std::size_t k, std::size_t j) {
        BigInt q = nearest_int(g.mu[k][j]);
        if (q.is_zero()) return;
        Rational rq(q);
        for (std::size_t d = 0; d < b[k].size(); ++d) b[k][d] -= q * b[j][d];
        for (std::size_t d = 0; d < n; ++d) u[k][d] -= q * u[j][d];
        for (std::size_t i = 0; i < j; ++i) g.mu[k][i] -= rq * g.mu[j][i];
        g.mu[k][j] -= rq;
    };

    std::size_t k = 1;
    while (k < n) {
        reduce_against(k, k - 1);
        Rational mu_kk1 = g.mu[k][k - 1];
        if (g.norm2[k] < (delta - mu_kk1 * mu_kk1) * g.norm2[k - 1]) {
            std::swap(b[k], b[k - 1]);
            std::swap(u[k], u[k - 1]);
            // standard swap updates for mu / norm2
            Rational Bnew = g.norm2[k] + mu_kk1 * mu_kk1 * g.norm2[k - 1];
            Rational mu_new = mu_kk1 * g.norm2[k - 1] / Bnew;
            g.norm2[k] = g.norm2[k - 1] * g.norm2[k] / Bnew;
            g.norm2[k - 1] = Bnew;
            for (std::size_t j = 0; j + 1 < k; ++j) std::swap(g.mu[k][j], g.mu[k - 1][j]);
            for (std::size_t i = k + 1; i < n; ++i) {
                Rational t = g.mu[i][k];
                g.mu[i][k] = g.mu[i][k - 1] - mu_kk1 * t;
                g.mu[i][k - 1] = t + mu_new * g.mu[i][k];
            }
            g.mu[k][k - 1] = mu_new;
            k = k > 1 ? k - 1 : 1;
        } else {
            for (std::size_t j = k - 1; j-- > 0;) reduce_against(k, j);
            ++k;
        }
    }
    Rational du = det_pm_one(u);
    if (du != Rational(1) && du != Rational(-1))
        throw std::logic_error("lll_reduce: transform not unimodular");
    return LatticeBasis{std::move(b)};
}

std::optional<Formula> find_relation(int m, int p, const BigInt& a, int degree, int D) {
    if (degree < 1) throw std::domain_error("find_relation: degree must be >= 1");
    if (D < 15 * (degree + 2)) return std::nullopt;  // precision floor

    MomentVector mv = moments(m, p, a, degree, D);
    FixedDec pi = pi_reference(D);
    int nrows = degree + 2;
    LatticeBasis basis;
    basis.rows.assign(static_cast<std::size_t>(nrows), {});
    for (int i = 0; i < nrows; ++i) {
        auto& row = basis.rows[static_cast<std::size_t>(i)];
        row.assign(static_cast<std::size_t>(nrows) + 1, BigInt(0));
        row[static_cast<std::size_t>(i)] = BigInt(1);
        const FixedDec& v = i <= degree ? mv.values[static_cast<std::size_t>(i)] : pi;
        row.back() = v.mantissa;  // = round(10^D * value)
    }
    LatticeBasis red = lll_reduce(basis, Rational(99, 100));

    const std::vector<BigInt>* best = nullptr;
    BigInt best_norm;
    for (const auto& row : red.rows) {
        if (row[static_cast<std::size_t>(degree) + 1].is_zero()) continue;
        BigInt n2;
        for (const auto& x : row) n2 += x * x;
        if (!best || n2 < best_norm) {
            best = &row;
            best_norm = n2;
        }
    }
    if (!best) return std::nullopt;

    std::vector<BigInt> c(best->begin(), best->begin() + degree + 2);
    if (c.back().sign() > 0)
        for (auto& x : c) x = -x;
    Formula F;
    F.m = m;
    F.p = p;
    F.a = a;
    F.r = -c.back();
    F.S_int.assign(c.begin(), c.end() - 1);
    while (!F.S_int.empty() && F.S_int.back().is_zero()) F.S_int.pop_back();
    F.provenance = Provenance::discovered;
    try {
        F.validate();
    } catch (const std::domain_error&) {
        return std::nullopt;
    }

    // Re-validate at doubled precision before accepting.
    MomentVector mv2 = moments(m, p, a, degree, 2 * D);
    FixedDec pi2 = pi_reference(2 * D);
    BigInt acc;
    for (int i = 0; i <= degree; ++i) {
        BigInt ci = i < static_cast<int>(F.S_int.size()) ? F.S_int[static_cast<std::size_t>(i)] : BigInt(0);
        acc += ci * mv2.values[static_cast<std::size_t>(i)].mantissa;
    }
    acc -= F.r * pi2.mantissa;
    FixedDec residual(acc, 2 * D);
    if (!residual.abs_less_than_pow10((3 * D) / 2)) return std::nullopt;
    return F;
}

}  // namespace piser::discover
