#include "piser/matrix.hpp"

namespace piser {

namespace {

// Clears each row to integers; returns the product of the row scales so the
// caller can undo them (det only - solutions are scale-invariant).
struct IntegerRows {
    std::vector<std::vector<BigInt>> m;
    Rational scale{1};
};

IntegerRows to_integer_rows(const MatrixQ& in, const std::vector<Rational>* rhs) {
    IntegerRows out;
    int extra = rhs ? 1 : 0;
    out.m.resize(static_cast<std::size_t>(in.rows()));
    for (int i = 0; i < in.rows(); ++i) {
        BigInt den(1);
        for (int j = 0; j < in.cols(); ++j) den = lcm(den, in.at(i, j).den());
        if (rhs) den = lcm(den, (*rhs)[static_cast<std::size_t>(i)].den());
        auto& row = out.m[static_cast<std::size_t>(i)];
        row.resize(static_cast<std::size_t>(in.cols() + extra));
        for (int j = 0; j < in.cols(); ++j) {
            const Rational& q = in.at(i, j);
            row[static_cast<std::size_t>(j)] = q.num() * BigInt::div_exact(den, q.den());
        }
        if (rhs) {
            const Rational& q = (*rhs)[static_cast<std::size_t>(i)];
            row[static_cast<std::size_t>(in.cols())] = q.num() * BigInt::div_exact(den, q.den());
        }
        out.scale *= Rational(den);
    }
    return out;
}

// Fraction-free forward elimination in place. Returns {sign, rank}; after a
// full-rank pass m is upper triangular with Bareiss-scaled entries.
std::pair<int, int> bareiss_forward(std::vector<std::vector<BigInt>>& m, int n, int cols) {
    int sign = 1;
    BigInt prev(1);
    for (int p = 0; p < n; ++p) {
        int piv = -1;
        for (int i = p; i < n; ++i) {
            if (!m[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)].is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv < 0) return {sign, p};
        if (piv != p) {
            std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(p)]);
            sign = -sign;
        }
        const auto& prow = m[static_cast<std::size_t>(p)];
        for (int i = p + 1; i < n; ++i) {
            auto& row = m[static_cast<std::size_t>(i)];
            const BigInt& rip = row[static_cast<std::size_t>(p)];
            for (int j = p + 1; j < cols; ++j) {
                BigInt& aij = row[static_cast<std::size_t>(j)];
                const BigInt& apj = prow[static_cast<std::size_t>(j)];
                if (aij.is_zero() && (rip.is_zero() || apj.is_zero())) continue;
                aij = BigInt::div_exact(prow[static_cast<std::size_t>(p)] * aij - rip * apj, prev);
            }
            row[static_cast<std::size_t>(p)] = BigInt(0);
        }
        prev = prow[static_cast<std::size_t>(p)];
    }
    return {sign, n};
}

}  // namespace

Rational det_structured(const MatrixQ& m) {
    if (m.rows() != m.cols()) throw std::domain_error("det_structured: matrix not square");
    if (m.rows() == 0) return Rational(1);
    IntegerRows rows = to_integer_rows(m, nullptr);
    auto [sign, rank] = bareiss_forward(rows.m, m.rows(), m.cols());
    if (rank < m.rows()) return Rational(0);
    Rational det(rows.m[static_cast<std::size_t>(m.rows()) - 1][static_cast<std::size_t>(m.cols()) - 1]);
    if (sign < 0) det = -det;
    return det / rows.scale;
}

std::vector<Rational> solve_exact(const MatrixQ& m, const std::vector<Rational>& rhs) {
    if (m.rows() != m.cols()) throw std::domain_error("solve_exact: matrix not square");
    if (rhs.size() != static_cast<std::size_t>(m.rows()))
        throw std::domain_error("solve_exact: rhs size mismatch");
    int n = m.rows();
    if (n == 0) return {};
    IntegerRows rows = to_integer_rows(m, &rhs);
    auto [sign, rank] = bareiss_forward(rows.m, n, n + 1);
    (void)sign;
    if (rank < n) throw SingularSystemError(rank);
    std::vector<Rational> x(static_cast<std::size_t>(n));
    for (int p = n - 1; p >= 0; --p) {
        Rational acc(rows.m[static_cast<std::size_t>(p)][static_cast<std::size_t>(n)]);
        for (int j = p + 1; j < n; ++j)
            acc -= Rational(rows.m[static_cast<std::size_t>(p)][static_cast<std::size_t>(j)]) *
                   x[static_cast<std::size_t>(j)];
        x[static_cast<std::size_t>(p)] =
            acc / Rational(rows.m[static_cast<std::size_t>(p)][static_cast<std::size_t>(p)]);
    }
    return x;
}

}  // namespace piser
