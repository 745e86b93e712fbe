#include "piser/binsplit.hpp"

#include <stdexcept>

namespace piser {

namespace {

// (P, Q, B, T) over [a, b):
//   P = prod pnum, Q = prod pden, B = prod cden,
//   T = sum_n cnum(n) (B/cden(n)) (prod_{u in [a,n)} pnum(u)) (prod_{u in [n,b)} pden(u)),
// so that the sum over [a,b) with unit entering weight is T / (B Q).
struct PQBT {
    BigInt P, Q, B, T;
};

PQBT recurse(const SplitSeries& s, std::int64_t a, std::int64_t b) {
    if (b - a == 1) {
        PQBT r;
        r.P = s.pnum(a);
        r.Q = s.pden(a);
        r.B = s.cden(a);
        r.T = s.cnum(a) * r.Q;
        return r;
    }
    std::int64_t m = a + (b - a) / 2;
    PQBT L = recurse(s, a, m);
    PQBT R = recurse(s, m, b);
    PQBT r;
    r.P = L.P * R.P;
    r.Q = L.Q * R.Q;
    r.B = L.B * R.B;
    r.T = L.T * (R.B * R.Q) + (L.B * L.P) * R.T;
    return r;
}

}  // namespace

SplitPair split_sum(const SplitSeries& s, std::int64_t n0, std::int64_t n1) {
    if (n1 <= n0) throw std::domain_error("split_sum: empty range");
    PQBT r = recurse(s, n0, n1);
    return SplitPair{r.T, r.B * r.Q};
}

SplitSeries formula_series(const Formula& F) {
    SplitSeries s;
    int m = F.m, p = F.p;
    BigInt a = F.a;
    s.cnum = [F](std::int64_t n) { return F.eval_S(n); };
    s.cden = [](std::int64_t) { return BigInt(1); };
    s.pnum = [m, p](std::int64_t n) {
        BigInt out(1);
        for (int i = 1; i <= p; ++i) out *= BigInt(static_cast<std::int64_t>(p) * n + i);
        for (int i = 1; i <= m - p; ++i) out *= BigInt(static_cast<std::int64_t>(m - p) * n + i);
        return out;
    };
    s.pden = [m, a](std::int64_t n) {
        BigInt out = a;
        for (int i = 1; i <= m; ++i) out *= BigInt(static_cast<std::int64_t>(m) * n + i);
        return out;
    };
    return s;
}

SplitPair formula_partial_sum(const Formula& F, std::int64_t n0, std::int64_t n1) {
    return split_sum(formula_series(F), n0, n1);
}

Rational arctan_inv_partial(std::int64_t x, std::int64_t terms) {
    if (x < 2) throw std::domain_error("arctan_inv_partial: x must be >= 2");
    if (terms < 1) throw std::domain_error("arctan_inv_partial: terms must be >= 1");
    SplitSeries s;
    BigInt x2 = BigInt(x) * BigInt(x);
    s.cnum = [](std::int64_t) { return BigInt(1); };
    s.cden = [](std::int64_t n) { return BigInt(2 * n + 1); };
    s.pnum = [](std::int64_t) { return BigInt(-1); };
    s.pden = [x2](std::int64_t) { return x2; };
    SplitPair ps = split_sum(s, 0, terms);
    return Rational(ps.num, ps.den * BigInt(x));
}

}  // namespace piser
