#pragma once

#include <string>
#include <vector>

#include "piser/bigint.hpp"

namespace piser {

enum class Provenance { proven, discovered, imported };

/// A (candidate or proven) series for pi:
///   pi = (1/r) sum_{n>=0} S(n) / ( C(mn, pn) a^n ),
/// with S(n) = sum_i S_int[i] n^i. Invariants: 0 < p < m, a != 0, r >= 1,
/// S_int nonempty with nonzero leading coefficient.
struct Formula {
    int m = 0;
    int p = 0;
    BigInt a;
    BigInt r{1};
    std::vector<BigInt> S_int;
    Provenance provenance = Provenance::imported;
    int proven_k = 0;  // meaningful when provenance == proven

    /// Throws std::domain_error when an invariant fails.
    void validate() const;

    /// S(n) as an exact integer.
    BigInt eval_S(std::int64_t n) const;
};

std::string to_string(Provenance p);

}  // namespace piser
