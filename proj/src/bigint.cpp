#include "piser/bigint.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace piser {

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v > 0 ? 1 : -1;
    // avoid overflow on INT64_MIN by working with unsigned magnitude
    std::uint64_t m = v > 0 ? static_cast<std::uint64_t>(v)
                            : 0 - static_cast<std::uint64_t>(v);
    while (m > 0) {
        mag_.push_back(static_cast<std::uint32_t>(m % kBase));
        m /= kBase;
    }
}

BigInt BigInt::parse(std::string_view s) {
    std::size_t i = 0;
    int sign = 1;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
    }
    if (i == s.size()) throw std::invalid_argument("BigInt::parse: empty numeral");
    BigInt out;
    std::size_t ndig = s.size() - i;
    std::size_t first = ndig % 9;
    out.mag_.assign((ndig + 8) / 9, 0);
    std::size_t limb = out.mag_.size();
    std::size_t pos = i;
    auto read_chunk = [&](std::size_t len) {
        std::uint32_t v = 0;
        for (std::size_t j = 0; j < len; ++j, ++pos) {
            char c = s[pos];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt::parse: bad digit");
            v = v * 10 + static_cast<std::uint32_t>(c - '0');
        }
        return v;
    };
    if (first > 0) out.mag_[--limb] = read_chunk(first);
    while (limb > 0) out.mag_[--limb] = read_chunk(9);
    out.sign_ = sign;
    out.trim();
    return out;
}

BigInt BigInt::pow10(int exp) {
    if (exp < 0) throw std::domain_error("BigInt::pow10: negative exponent");
    BigInt out;
    out.mag_.assign(static_cast<std::size_t>(exp / 9), 0);
    std::uint32_t top = 1;
    for (int i = 0; i < exp % 9; ++i) top *= 10;
    out.mag_.push_back(top);
    out.sign_ = 1;
    return out;
}

bool BigInt::is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }

BigInt BigInt::operator-() const {
    BigInt out = *this;
    out.sign_ = -out.sign_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    if (out.sign_ < 0) out.sign_ = 1;
    return out;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

int BigInt::cmp(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> out(hi.size() + 1, 0);
    std::uint32_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint32_t s = hi[i] + carry;
        if (i < lo.size()) s += lo[i];
        if (s >= kBase) { s -= kBase; carry = 1; } else { carry = 0; }
        out[i] = s;
    }
    out[hi.size()] = carry;
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// requires |a| >= |b|
std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out(a.size(), 0);
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (d < 0) { d += kBase; borrow = 1; } else { borrow = 0; }
        out[i] = static_cast<std::uint32_t>(d);
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_school(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint64_t> acc(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t ai = a[i];
        if (ai == 0) continue;
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            // acc slot stays < 2^64: worst addition ~ (1e9)^2 + 1e9 + acc
            std::uint64_t cur = acc[i + j] + ai * b[j] + carry;
            acc[i + j] = cur % kBase;
            carry = cur / kBase;
        }
        std::size_t pos = i + b.size();
        while (carry > 0) {
            std::uint64_t cur = acc[pos] + carry;
            acc[pos] = cur % kBase;
            carry = cur / kBase;
            ++pos;
        }
    }
    std::vector<std::uint32_t> out(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) out[i] = static_cast<std::uint32_t>(acc[i]);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    if (std::min(a.size(), b.size()) < static_cast<std::size_t>(kKaratsubaLimbs))
        return mul_school(a, b);
    // Karatsuba split at half of the longer operand.
    std::size_t half = std::max(a.size(), b.size()) / 2;
    auto lo = [&](const std::vector<std::uint32_t>& v) {
        std::vector<std::uint32_t> out(v.begin(), v.begin() + std::min(half, v.size()));
        while (!out.empty() && out.back() == 0) out.pop_back();
        return out;
    };
    auto hi = [&](const std::vector<std::uint32_t>& v) {
        if (v.size() <= half) return std::vector<std::uint32_t>{};
        return std::vector<std::uint32_t>(v.begin() + half, v.end());
    };
    std::vector<std::uint32_t> a0 = lo(a), a1 = hi(a), b0 = lo(b), b1 = hi(b);
    std::vector<std::uint32_t> z0 = mul_mag(a0, b0);
    std::vector<std::uint32_t> z2 = mul_mag(a1, b1);
    std::vector<std::uint32_t> z1 = mul_mag(add_mag(a0, a1), add_mag(b0, b1));
    z1 = sub_mag(z1, add_mag(z0, z2));
    std::vector<std::uint32_t> out(std::max({z0.size(), z1.size() + half, z2.size() + 2 * half}) + 1, 0);
    auto add_at = [&](const std::vector<std::uint32_t>& v, std::size_t off) {
        std::uint32_t carry = 0;
        std::size_t i = 0;
        for (; i < v.size(); ++i) {
            std::uint32_t s = out[off + i] + v[i] + carry;
            if (s >= kBase) { s -= kBase; carry = 1; } else { carry = 0; }
            out[off + i] = s;
        }
        while (carry > 0) {
            std::uint32_t s = out[off + i] + carry;
            if (s >= kBase) { s -= kBase; carry = 1; } else { carry = 0; }
            out[off + i] = s;
            ++i;
        }
    };
    add_at(z0, 0);
    add_at(z1, half);
    add_at(z2, 2 * half);
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt out;
    if (a.sign_ == b.sign_) {
        out.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        out.sign_ = a.sign_;
    } else {
        int c = BigInt::cmp_mag(a.mag_, b.mag_);
        if (c == 0) return BigInt();
        const BigInt& big = c > 0 ? a : b;
        const BigInt& small = c > 0 ? b : a;
        out.mag_ = BigInt::sub_mag(big.mag_, small.mag_);
        out.sign_ = big.sign_;
    }
    out.trim();
    return out;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0 || b.sign_ == 0) return BigInt();
    BigInt out;
    out.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    out.sign_ = a.sign_ * b.sign_;
    out.trim();
    return out;
}

// Knuth algorithm D, base 1e9.
void BigInt::divmod_mag(const std::vector<std::uint32_t>& u_in, const std::vector<std::uint32_t>& v_in,
                        std::vector<std::uint32_t>& q, std::vector<std::uint32_t>& r) {
    if (cmp_mag(u_in, v_in) < 0) { q.clear(); r = u_in; return; }
    if (v_in.size() == 1) {
        std::uint64_t d = v_in[0], rem = 0;
        q.assign(u_in.size(), 0);
        for (std::size_t i = u_in.size(); i-- > 0;) {
            std::uint64_t cur = rem * kBase + u_in[i];
            q[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.clear();
        if (rem) r.push_back(static_cast<std::uint32_t>(rem));
        return;
    }
    // normalize so top limb of v is >= base/2
    std::uint32_t d = static_cast<std::uint32_t>(kBase / (static_cast<std::uint64_t>(v_in.back()) + 1));
    std::vector<std::uint32_t> u(u_in.size() + 1, 0), v(v_in.size(), 0);
    {
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < u_in.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(u_in[i]) * d + carry;
            u[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
        u[u_in.size()] = static_cast<std::uint32_t>(carry);
        carry = 0;
        for (std::size_t i = 0; i < v_in.size(); ++i) {
            std::uint64_t cur = static_cast<std::uint64_t>(v_in[i]) * d + carry;
            v[i] = static_cast<std::uint32_t>(cur % kBase);
            carry = cur / kBase;
        }
    }
    std::size_t n = v.size(), m = u.size() - n;
    q.assign(m, 0);
    for (std::size_t j = m; j-- > 0;) {
        std::uint64_t top = static_cast<std::uint64_t>(u[j + n]) * kBase + u[j + n - 1];
        std::uint64_t qhat = top / v[n - 1];
        std::uint64_t rhat = top % v[n - 1];
        while (qhat >= kBase ||
               (n >= 2 && qhat * v[n - 2] > rhat * kBase + u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // multiply-subtract
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod / kBase;
            std::int64_t sub = static_cast<std::int64_t>(u[i + j]) -
                               static_cast<std::int64_t>(prod % kBase) - borrow;
            if (sub < 0) { sub += kBase; borrow = 1; } else { borrow = 0; }
            u[i + j] = static_cast<std::uint32_t>(sub);
        }
        std::int64_t sub = static_cast<std::int64_t>(u[j + n]) - static_cast<std::int64_t>(carry) - borrow;
        if (sub < 0) {
            // qhat was one too large: add v back
            sub += kBase;
            --qhat;
            std::uint32_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint32_t s = u[i + j] + v[i] + c2;
                if (s >= kBase) { s -= kBase; c2 = 1; } else { c2 = 0; }
                u[i + j] = s;
            }
            sub += c2;
            if (sub >= static_cast<std::int64_t>(kBase)) sub -= kBase;
        }
        u[j + n] = static_cast<std::uint32_t>(sub);
        q[j] = static_cast<std::uint32_t>(qhat);
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    // denormalize remainder
    u.resize(n);
    std::uint64_t rem = 0;
    r.assign(n, 0);
    for (std::size_t i = n; i-- > 0;) {
        std::uint64_t cur = rem * kBase + u[i];
        r[i] = static_cast<std::uint32_t>(cur / d);
        rem = cur % d;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& quot, BigInt& rem) {
    if (den.sign_ == 0) throw std::domain_error("BigInt: division by zero");
    if (num.sign_ == 0) { quot = BigInt(); rem = BigInt(); return; }
    std::vector<std::uint32_t> q, r;
    divmod_mag(num.mag_, den.mag_, q, r);
    quot.mag_ = std::move(q);
    quot.sign_ = quot.mag_.empty() ? 0 : num.sign_ * den.sign_;
    rem.mag_ = std::move(r);
    rem.sign_ = rem.mag_.empty() ? 0 : num.sign_;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return q;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    return r;
}

BigInt BigInt::div_exact(const BigInt& num, const BigInt& den) {
    BigInt q, r;
    divmod(num, den, q, r);
    if (!r.is_zero()) throw std::logic_error("BigInt::div_exact: nonzero remainder");
    return q;
}

BigInt BigInt::pow(unsigned e) const {
    BigInt base = *this, out(1);
    while (e > 0) {
        if (e & 1u) out *= base;
        base *= base;
        e >>= 1u;
    }
    return out;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    std::string out;
    if (sign_ < 0) out.push_back('-');
    char buf[16];
    std::snprintf(buf, sizeof buf, "%u", mag_.back());
    out += buf;
    for (std::size_t i = mag_.size() - 1; i-- > 0;) {
        std::snprintf(buf, sizeof buf, "%09u", mag_[i]);
        out += buf;
    }
    return out;
}

int BigInt::digits10() const {
    if (sign_ == 0) return 1;
    int d = 9 * static_cast<int>(mag_.size() - 1);
    std::uint32_t top = mag_.back();
    while (top > 0) { ++d; top /= 10; }
    return d;
}

bool BigInt::fits_int64() const { return mag_.size() <= 2; }

std::int64_t BigInt::to_int64() const {
    std::int64_t v = 0;
    for (std::size_t i = mag_.size(); i-- > 0;) v = v * kBase + mag_[i];
    return sign_ < 0 ? -v : v;
}

bool BigInt::is_even() const { return mag_.empty() || (mag_[0] % 2 == 0); }

BigInt gcd(BigInt a, BigInt b) {
    a = a.abs();
    b = b.abs();
    while (!b.is_zero()) {
        BigInt r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    if (a.is_zero() || b.is_zero()) return BigInt();
    return BigInt::div_exact(a * b, gcd(a, b)).abs();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) throw std::domain_error("binomial: requires 0 <= k <= n");
    if (k > n - k) k = n - k;
    BigInt out(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        out *= BigInt(n - k + i);
        out = BigInt::div_exact(out, BigInt(i));
    }
    return out;
}

BigInt factorial(std::int64_t n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt out(1);
    for (std::int64_t i = 2; i <= n; ++i) out *= BigInt(i);
    return out;
}

}  // namespace piser
