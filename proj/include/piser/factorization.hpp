#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "piser/bigint.hpp"

namespace piser {

/// Partial factorization from trial division: strictly increasing primes with
/// positive exponents, plus the unfactored cofactor (1 when fully split).
/// Invariant: prod(prime^exp) * cofactor == |original value|.
struct Factorization {
    std::vector<std::pair<BigInt, int>> factors;
    BigInt cofactor{1};

    BigInt value() const;
    /// "2^91 · 3^8 · 5^7 · 7^2", with "· C" appended when cofactor > 1; "1" if empty.
    std::string to_string() const;
};

/// Trial division of n (nonzero) by every prime <= bound; the cofactor keeps
/// whatever remains. No primality testing beyond the bound.
Factorization factor_smooth(const BigInt& n, std::int64_t bound);

std::vector<std::int64_t> primes_up_to(std::int64_t bound);

}  // namespace piser
