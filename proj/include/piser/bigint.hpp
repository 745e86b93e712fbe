#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace piser {

/// Arbitrary-precision signed integer.
///
/// Sign-magnitude representation over base-10^9 limbs (little-endian), which
/// keeps decimal printing and digit-count queries exact and cheap. Zero is
/// canonical: sign 0, no limbs.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);
    static BigInt parse(std::string_view s);
    static BigInt pow10(int exp);

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_one() const;

    BigInt operator-() const;
    BigInt abs() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);
    BigInt& operator+=(const BigInt& o) { return *this = *this + o; }
    BigInt& operator-=(const BigInt& o) { return *this = *this - o; }
    BigInt& operator*=(const BigInt& o) { return *this = *this * o; }

    /// Truncating division (quotient rounds toward zero, remainder has the
    /// sign of the dividend). Throws std::domain_error on division by zero.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem);
    friend BigInt operator/(const BigInt& a, const BigInt& b);
    friend BigInt operator%(const BigInt& a, const BigInt& b);

    /// Exact division; throws std::logic_error if the remainder is nonzero.
    static BigInt div_exact(const BigInt& num, const BigInt& den);

    BigInt pow(unsigned e) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }
    static int cmp(const BigInt& a, const BigInt& b);

    std::string to_string() const;
    /// Number of decimal digits of |*this| (0 has one digit).
    int digits10() const;
    /// Value fits in int64 range? (for small-number fast paths in callers)
    bool fits_int64() const;
    std::int64_t to_int64() const;

    bool is_even() const;

private:
    static constexpr std::uint32_t kBase = 1000000000u;
    static constexpr int kKaratsubaLimbs = 48;

    int sign_ = 0;                     // -1, 0, +1
    std::vector<std::uint32_t> mag_;   // base 1e9, little-endian, no leading zeros

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_school(const std::vector<std::uint32_t>& a,
                                                 const std::vector<std::uint32_t>& b);
    static void divmod_mag(const std::vector<std::uint32_t>& u, const std::vector<std::uint32_t>& v,
                           std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r);
};

BigInt gcd(BigInt a, BigInt b);
BigInt lcm(const BigInt& a, const BigInt& b);

/// Exact binomial coefficient C(n, k). Requires k <= n (throws std::domain_error).
BigInt binomial(std::int64_t n, std::int64_t k);

BigInt factorial(std::int64_t n);

}  // namespace piser
