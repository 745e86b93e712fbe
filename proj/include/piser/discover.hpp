#pragma once

#include <optional>
#include <vector>

#include "piser/evalnum.hpp"
#include "piser/fixed_dec.hpp"
#include "piser/formula.hpp"
#include "piser/rational.hpp"

namespace piser::discover {

/// Exact Gaussian integer, used to check the root condition of candidates.
struct GaussInt {
    BigInt re, im;
    friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
        return GaussInt{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    GaussInt pow(unsigned e) const;
    bool is_real() const { return im.is_zero(); }
};

enum class WitnessRoot { at_i, at_one_plus_i };

/// x^p (1-x)^(m-p) evaluated exactly at the witness root.
GaussInt witness_value(int m, int p, WitnessRoot root);

struct CandidateParams {
    int m = 0;
    int p = 0;
    BigInt a;
    WitnessRoot witness_root = WitnessRoot::at_i;
};

/// All (m, p, a) with m <= max_m, 0 < p < m, for which x^p (1-x)^(m-p) takes
/// a real nonzero integer value a at i or at 1+i. Deduplicated (the i witness
/// wins when both roots work), sorted by (m, p). Requires max_m >= 3.
std::vector<CandidateParams> enumerate_candidates(int max_m);

/// High-precision moment sums s(j) = sum_n n^j / (C(mn, pn) a^n).
struct MomentVector {
    int m = 0, p = 0;
    BigInt a;
    int D = 0;
    std::vector<FixedDec> values;  // s(0) .. s(jmax), each within 10^(-D)
};

/// Computes s(0..jmax) to D digits with a proven geometric tail bound per
/// moment. Throws std::domain_error for divergent parameters.
MomentVector moments(int m, int p, const BigInt& a, int jmax, int D);

struct LatticeBasis {
    std::vector<std::vector<BigInt>> rows;
};

/// Exact-integer LLL reduction with rational Gram-Schmidt data, 1/4 < delta < 1.
/// The returned basis spans the same lattice; the unimodularity of the
/// accumulated transform (det = +-1) is checked internally. Throws
/// std::domain_error on dependent rows.
LatticeBasis lll_reduce(const LatticeBasis& basis, const Rational& delta);

/// Integer-relation search: builds the knapsack lattice
/// [ I | round(10^D * (s(0), ..., s(degree), pi)) ], reduces it, takes the
/// shortest vector with a nonzero pi coefficient, and re-validates the
/// resulting formula at precision 2D (residual below 10^(-3D/2)). Returns
/// nullopt when nothing survives, and refuses to guess below the precision
/// floor D >= 15 (degree+2) (lattices built from too few digits can still
/// contain the target relation by luck, so the floor is what keeps the
/// accepted output trustworthy). degree >= 1.
std::optional<Formula> find_relation(int m, int p, const BigInt& a, int degree, int D);

}  // namespace piser::discover
