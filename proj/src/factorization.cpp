#include "piser/factorization.hpp"

#include <stdexcept>

namespace piser {

BigInt Factorization::value() const {
    BigInt out(1);
    for (const auto& [p, e] : factors) out *= p.pow(static_cast<unsigned>(e));
    return out * cofactor;
}

std::string Factorization::to_string() const {
    if (factors.empty() && cofactor.is_one()) return "1";
    std::string out;
    for (const auto& [p, e] : factors) {
        if (!out.empty()) out += " · ";
        out += p.to_string();
        if (e > 1) out += "^" + std::to_string(e);
    }
    if (!cofactor.is_one()) {
        if (!out.empty()) out += " · ";
        out += cofactor.to_string();
    }
    return out;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> primes;
    if (bound < 2) return primes;
    std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
    for (std::int64_t p = 2; p <= bound; ++p) {
        if (!sieve[static_cast<std::size_t>(p)]) continue;
        primes.push_back(p);
        for (std::int64_t q = p * p; q <= bound; q += p) sieve[static_cast<std::size_t>(q)] = false;
    }
    return primes;
}

Factorization factor_smooth(const BigInt& n, std::int64_t bound) {
    if (n.is_zero()) throw std::domain_error("factor_smooth: zero input");
    if (bound < 2) throw std::domain_error("factor_smooth: bound must be >= 2");
    Factorization out;
    BigInt rest = n.abs();
    for (std::int64_t p : primes_up_to(bound)) {
        if (rest.is_one()) break;
        BigInt bp(p);
        int e = 0;
        for (;;) {
            BigInt q, r;
            BigInt::divmod(rest, bp, q, r);
            if (!r.is_zero()) break;
            rest = std::move(q);
            ++e;
        }
        if (e > 0) out.factors.emplace_back(std::move(bp), e);
    }
    out.cofactor = std::move(rest);
    return out;
}

}  // namespace piser
