#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gramdet {

// Arbitrary-precision signed integer, sign + magnitude with 32-bit limbs.
// Schoolbook multiplication and Knuth algorithm D division; entirely exact.
// Everything in this project that is not modular arithmetic runs on this type.
class big_int {
public:
    big_int() = default;

    big_int(long long v) {  // NOLINT: implicit by design
        if (v == 0) return;
        sign_ = v < 0 ? -1 : 1;
        unsigned long long u = v < 0 ? -static_cast<unsigned long long>(v) : static_cast<unsigned long long>(v);
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }
    big_int(int v) : big_int(static_cast<long long>(v)) {}
    big_int(unsigned long long u) {
        if (u == 0) return;
        sign_ = 1;
        while (u) {
            mag_.push_back(static_cast<uint32_t>(u & 0xffffffffu));
            u >>= 32;
        }
    }

    explicit big_int(std::string_view s) { *this = parse(s); }

    static big_int parse(std::string_view s) {
        big_int r;
        bool neg = false;
        size_t i = 0;
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
            neg = s[i] == '-';
            ++i;
        }
        if (i == s.size()) throw std::invalid_argument("big_int: empty numeral");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("big_int: bad digit");
            r.mul_small_inplace(10);
            r.add_small_inplace(static_cast<uint32_t>(s[i] - '0'));
        }
        if (neg && !r.is_zero()) r.sign_ = -1;
        return r;
    }

    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_one() const { return sign_ == 1 && mag_.size() == 1 && mag_[0] == 1; }
    int sign() const { return sign_; }
    bool odd() const { return sign_ != 0 && (mag_[0] & 1u); }

    friend bool operator==(const big_int& a, const big_int& b) {
        return a.sign_ == b.sign_ && a.mag_ == b.mag_;
    }
    friend bool operator!=(const big_int& a, const big_int& b) { return !(a == b); }
    friend bool operator<(const big_int& a, const big_int& b) { return cmp(a, b) < 0; }
    friend bool operator>(const big_int& a, const big_int& b) { return cmp(a, b) > 0; }
    friend bool operator<=(const big_int& a, const big_int& b) { return cmp(a, b) <= 0; }
    friend bool operator>=(const big_int& a, const big_int& b) { return cmp(a, b) >= 0; }

    static int cmp(const big_int& a, const big_int& b) {
        if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
        int c = cmp_mag(a.mag_, b.mag_);
        return a.sign_ >= 0 ? c : -c;
    }

    big_int operator-() const {
        big_int r = *this;
        r.sign_ = -r.sign_;
        return r;
    }

    friend big_int operator+(const big_int& a, const big_int& b) {
        if (a.sign_ == 0) return b;
        if (b.sign_ == 0) return a;
        big_int r;
        if (a.sign_ == b.sign_) {
            r.mag_ = add_mag(a.mag_, b.mag_);
            r.sign_ = a.sign_;
        } else {
            int c = cmp_mag(a.mag_, b.mag_);
            if (c == 0) return big_int();
            if (c > 0) {
                r.mag_ = sub_mag(a.mag_, b.mag_);
                r.sign_ = a.sign_;
            } else {
                r.mag_ = sub_mag(b.mag_, a.mag_);
                r.sign_ = b.sign_;
            }
        }
        return r;
    }
    friend big_int operator-(const big_int& a, const big_int& b) { return a + (-b); }

    friend big_int operator*(const big_int& a, const big_int& b) {
        if (a.sign_ == 0 || b.sign_ == 0) return big_int();
        big_int r;
        r.mag_ = mul_mag(a.mag_, b.mag_);
        r.sign_ = a.sign_ * b.sign_;
        return r;
    }

    // Truncated division: q = trunc(a/b), r = a - q*b, sign(r) = sign(a).
    static void divmod(const big_int& a, const big_int& b, big_int& q, big_int& r) {
        if (b.sign_ == 0) throw std::domain_error("big_int: division by zero");
        if (a.sign_ == 0) {
            q = big_int();
            r = big_int();
            return;
        }
        std::vector<uint32_t> qm, rm;
        divmod_mag(a.mag_, b.mag_, qm, rm);
        q = big_int();
        r = big_int();
        if (!qm.empty()) {
            q.mag_ = std::move(qm);
            q.sign_ = a.sign_ * b.sign_;
        }
        if (!rm.empty()) {
            r.mag_ = std::move(rm);
            r.sign_ = a.sign_;
        }
    }

    friend big_int operator/(const big_int& a, const big_int& b) {
        big_int q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend big_int operator%(const big_int& a, const big_int& b) {
        big_int q, r;
        divmod(a, b, q, r);
        return r;
    }

    big_int& operator+=(const big_int& o) { return *this = *this + o; }
    big_int& operator-=(const big_int& o) { return *this = *this - o; }
    big_int& operator*=(const big_int& o) { return *this = *this * o; }
    big_int& operator/=(const big_int& o) { return *this = *this / o; }
    big_int& operator%=(const big_int& o) { return *this = *this % o; }

    big_int abs() const {
        big_int r = *this;
        if (r.sign_ < 0) r.sign_ = 1;
        return r;
    }

    static big_int gcd(big_int a, big_int b) {
        a.sign_ = a.is_zero() ? 0 : 1;
        b.sign_ = b.is_zero() ? 0 : 1;
        while (!b.is_zero()) {
            big_int q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    static big_int pow(const big_int& base, unsigned long long e) {
        big_int r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // Floor of the square root; argument must be >= 0.
    static big_int isqrt(const big_int& a) {
        if (a.sign_ < 0) throw std::domain_error("big_int: isqrt of negative");
        if (a.is_zero()) return big_int();
        size_t bits = a.bit_length();
        big_int x = big_int(1) << ((bits + 1) / 2);  // x >= sqrt(a)
        for (;;) {
            big_int y = (x + a / x) >> 1;
            if (y >= x) break;
            x = std::move(y);
        }
        return x;
    }

    big_int operator<<(size_t bits) const {
        if (is_zero()) return big_int();
        big_int r;
        r.sign_ = sign_;
        r.mag_ = mag_;
        shl_bits(r.mag_, bits);
        return r;
    }
    big_int operator>>(size_t bits) const {
        if (is_zero()) return big_int();
        big_int r;
        r.mag_ = mag_;
        shr_bits(r.mag_, bits);
        if (!r.mag_.empty()) r.sign_ = sign_;
        return r;
    }

    size_t bit_length() const {
        if (mag_.empty()) return 0;
        uint32_t top = mag_.back();
        size_t b = mag_.size() * 32;
        for (uint32_t m = 0x80000000u; m && !(top & m); m >>= 1) --b;
        return b;
    }

    bool fits_int64() const {
        if (mag_.size() > 2) return false;
        unsigned long long u = to_u64_unchecked();
        if (sign_ >= 0) return u <= 0x7fffffffffffffffull;
        return u <= 0x8000000000000000ull;
    }
    long long to_int64() const {
        if (!fits_int64()) throw std::overflow_error("big_int: does not fit int64");
        unsigned long long u = to_u64_unchecked();
        return sign_ < 0 ? -static_cast<long long>(u) : static_cast<long long>(u);
    }

    // |x| mod m for machine-word m; used by the CRT ladder (caller handles sign).
    uint64_t mod_u64(uint64_t m) const {
        if (m == 0) throw std::domain_error("big_int: mod by zero");
        unsigned __int128 acc = 0;
        for (size_t i = mag_.size(); i-- > 0;) acc = ((acc << 32) | mag_[i]) % m;
        return static_cast<uint64_t>(acc);
    }

    friend big_int operator*(const big_int& a, uint64_t s) { return a * big_int(static_cast<unsigned long long>(s)); }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::vector<uint32_t> m = mag_;
        std::string digits;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            for (int d = 0; d < 9; ++d) {
                digits.push_back(static_cast<char>('0' + rem % 10));
                rem /= 10;
            }
        }
        while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
        if (sign_ < 0) digits.push_back('-');
        std::reverse(digits.begin(), digits.end());
        return digits;
    }

    friend std::ostream& operator<<(std::ostream& os, const big_int& v) { return os << v.to_string(); }

private:
    int sign_ = 0;
    std::vector<uint32_t> mag_;  // little-endian, normalized (no leading zeros)

    unsigned long long to_u64_unchecked() const {
        unsigned long long u = 0;
        if (mag_.size() > 1) u = static_cast<unsigned long long>(mag_[1]) << 32;
        if (!mag_.empty()) u |= mag_[0];
        return u;
    }

    void mul_small_inplace(uint32_t s) {
        uint64_t carry = 0;
        for (auto& limb : mag_) {
            uint64_t cur = static_cast<uint64_t>(limb) * s + carry;
            limb = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
        if (!mag_.empty() && sign_ == 0) sign_ = 1;
        trim();
    }
    void add_small_inplace(uint32_t s) {
        if (s == 0) return;
        if (sign_ == 0) {
            sign_ = 1;
            mag_.assign(1, s);
            return;
        }
        uint64_t carry = s;
        for (size_t i = 0; i < mag_.size() && carry; ++i) {
            uint64_t cur = static_cast<uint64_t>(mag_[i]) + carry;
            mag_[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) mag_.push_back(static_cast<uint32_t>(carry));
    }
    void trim() {
        while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
        if (mag_.empty()) sign_ = 0;
    }

    static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }

    static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        const auto &big = a.size() >= b.size() ? a : b, &small = a.size() >= b.size() ? b : a;
        std::vector<uint32_t> r(big.size());
        uint64_t carry = 0;
        for (size_t i = 0; i < big.size(); ++i) {
            uint64_t cur = static_cast<uint64_t>(big[i]) + (i < small.size() ? small[i] : 0u) + carry;
            r[i] = static_cast<uint32_t>(cur);
            carry = cur >> 32;
        }
        if (carry) r.push_back(static_cast<uint32_t>(carry));
        return r;
    }

    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size());
        int64_t borrow = 0;
        for (size_t i = 0; i < a.size(); ++i) {
            int64_t cur = static_cast<int64_t>(a[i]) - (i < b.size() ? b[i] : 0u) - borrow;
            borrow = cur < 0;
            if (cur < 0) cur += (1ll << 32);
            r[i] = static_cast<uint32_t>(cur);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
        std::vector<uint32_t> r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            uint64_t ai = a[i];
            if (ai == 0) continue;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = ai * b[j] + r[i + j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = r[k] + carry;
                r[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }

    static void shl_bits(std::vector<uint32_t>& m, size_t bits) {
        size_t limbs = bits / 32, rem = bits % 32;
        if (rem) {
            uint32_t carry = 0;
            for (auto& limb : m) {
                uint32_t nc = limb >> (32 - rem);
                limb = (limb << rem) | carry;
                carry = nc;
            }
            if (carry) m.push_back(carry);
        }
        m.insert(m.begin(), limbs, 0u);
        while (!m.empty() && m.back() == 0) m.pop_back();
    }
    static void shr_bits(std::vector<uint32_t>& m, size_t bits) {
        size_t limbs = bits / 32, rem = bits % 32;
        if (limbs >= m.size()) {
            m.clear();
            return;
        }
        m.erase(m.begin(), m.begin() + static_cast<long>(limbs));
        if (rem) {
            for (size_t i = 0; i < m.size(); ++i) {
                uint32_t hi = i + 1 < m.size() ? m[i + 1] : 0u;
                m[i] = (m[i] >> rem) | (hi << (32 - rem));
            }
        }
        while (!m.empty() && m.back() == 0) m.pop_back();
    }

    // Knuth algorithm D on 32-bit limbs. Fast path for single-limb divisors.
    static void divmod_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                           std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
        if (b.empty()) throw std::domain_error("big_int: division by zero");
        if (cmp_mag(a, b) < 0) {
            q.clear();
            r = a;
            while (!r.empty() && r.back() == 0) r.pop_back();
            return;
        }
        if (b.size() == 1) {
            q.assign(a.size(), 0);
            uint64_t rem = 0, d = b[0];
            for (size_t i = a.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | a[i];
                q[i] = static_cast<uint32_t>(cur / d);
                rem = cur % d;
            }
            while (!q.empty() && q.back() == 0) q.pop_back();
            r.clear();
            if (rem) r.push_back(static_cast<uint32_t>(rem));
            return;
        }

        // Normalize so the divisor's top limb has its high bit set.
        size_t shift = 0;
        for (uint32_t top = b.back(); !(top & 0x80000000u); top <<= 1) ++shift;
        std::vector<uint32_t> u = a, v = b;
        shl_bits(u, shift);
        shl_bits(v, shift);
        size_t n = v.size(), m = u.size() - n;
        u.push_back(0);
        q.assign(m + 1, 0);

        const uint64_t base = 1ull << 32;
        for (size_t j = m + 1; j-- > 0;) {
            uint64_t num = (static_cast<uint64_t>(u[j + n]) << 32) | u[j + n - 1];
            uint64_t qhat = num / v[n - 1];
            uint64_t rhat = num % v[n - 1];
            while (qhat >= base ||
                   qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
                --qhat;
                rhat += v[n - 1];
                if (rhat >= base) break;
            }
            // u[j..j+n] -= qhat * v
            int64_t borrow = 0;
            uint64_t carry = 0;
            for (size_t i = 0; i < n; ++i) {
                uint64_t p = qhat * v[i] + carry;
                carry = p >> 32;
                int64_t t = static_cast<int64_t>(u[i + j]) - static_cast<int64_t>(p & 0xffffffffu) - borrow;
                borrow = t < 0;
                if (t < 0) t += static_cast<int64_t>(base);
                u[i + j] = static_cast<uint32_t>(t);
            }
            int64_t t = static_cast<int64_t>(u[j + n]) - static_cast<int64_t>(carry) - borrow;
            bool neg = t < 0;
            u[j + n] = static_cast<uint32_t>(t);
            if (neg) {
                // qhat was one too large; add v back
                --qhat;
                uint64_t c = 0;
                for (size_t i = 0; i < n; ++i) {
                    uint64_t s = static_cast<uint64_t>(u[i + j]) + v[i] + c;
                    u[i + j] = static_cast<uint32_t>(s);
                    c = s >> 32;
                }
                u[j + n] = static_cast<uint32_t>(u[j + n] + c);
            }
            q[j] = static_cast<uint32_t>(qhat);
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r.assign(u.begin(), u.begin() + static_cast<long>(n));
        shr_bits(r, shift);
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
};

inline big_int factorial(int n) {
    big_int r(1);
    for (int i = 2; i <= n; ++i) r *= big_int(i);
    return r;
}

// C(n, k) over the integers; zero outside the triangle.
inline big_int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return big_int(0);
    if (k > n - k) k = n - k;
    big_int num(1), den(1);
    for (long long i = 0; i < k; ++i) {
        num *= big_int(n - i);
        den *= big_int(i + 1);
    }
    return num / den;
}

// n(n-1)...(n-r+1) evaluated at an integer n.
inline big_int falling_factorial_value(const big_int& n, int r) {
    big_int acc(1);
    for (int i = 0; i < r; ++i) acc *= n - big_int(i);
    return acc;
}

}  // namespace gramdet
