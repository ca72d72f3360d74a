#pragma once

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "gramdet/bigint.hpp"

namespace gramdet {

using u64 = uint64_t;
using u128 = unsigned __int128;

// Deterministic Miller-Rabin, valid for all 64-bit inputs with this base set.
inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) {
        d >>= 1;
        ++s;
    }
    auto mulmod = [n](u64 a, u64 b) { return static_cast<u64>(static_cast<u128>(a) * b % n); };
    auto powmod = [&](u64 a, u64 e) {
        u64 r = 1;
        while (e) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Descending sequence of 62-bit primes for the CRT ladder.
inline u64 nth_crt_prime(size_t index) {
    static std::mutex mtx;
    static std::vector<u64> cache;
    static u64 cursor = (1ull << 62) - 1;
    std::lock_guard<std::mutex> lock(mtx);
    while (cache.size() <= index) {
        while (!is_prime_u64(cursor)) --cursor;
        cache.push_back(cursor);
        --cursor;
    }
    return cache[index];
}

// Montgomery arithmetic for a fixed odd modulus p < 2^63.
struct montgomery {
    u64 p, pinv, r2, one;

    explicit montgomery(u64 modulus) : p(modulus) {
        // pinv = -p^{-1} mod 2^64 by Newton iteration
        u64 inv = p;
        for (int i = 0; i < 5; ++i) inv *= 2 - p * inv;
        pinv = ~inv + 1;
        u128 r = (u128(1) << 64) % p;
        r2 = static_cast<u64>(r * r % p);
        one = to_mont(1);
    }

    u64 redc(u128 t) const {
        u64 m = static_cast<u64>(t) * pinv;
        u128 s = t + static_cast<u128>(m) * p;
        u64 r = static_cast<u64>(s >> 64);
        return r >= p ? r - p : r;
    }
    u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
    u64 to_mont(u64 x) const { return mul(x % p, r2); }
    u64 from_mont(u64 x) const { return redc(x); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 pow(u64 base_mont, u64 e) const {
        u64 r = one, b = base_mont;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 x_mont) const { return pow(x_mont, p - 2); }
};

// det mod p by plain row-pivoted elimination; handles any input.
inline u64 mod_det_general(std::vector<u64> a, size_t n, const montgomery& mg) {
    u64 det = mg.one;
    bool neg = false;
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        while (piv < n && a[piv * n + k] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != k) {
            for (size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
            neg = !neg;
        }
        u64 d = a[k * n + k];
        det = mg.mul(det, d);
        u64 dinv = mg.inv(d);
        for (size_t i = k + 1; i < n; ++i) {
            u64 f = mg.mul(a[i * n + k], dinv);
            if (f == 0) continue;
            for (size_t j = k + 1; j < n; ++j) a[i * n + j] = mg.sub(a[i * n + j], mg.mul(f, a[k * n + j]));
        }
    }
    u64 d = mg.from_mont(det);
    return neg ? (d == 0 ? 0 : mg.p - d) : d;
}

// det mod p of a symmetric matrix via LDL^T-style elimination on the lower
// triangle (half the multiplies). Bails out to the general routine when a
// leading pivot vanishes mod p, which happens for structural reasons at
// small evaluation nodes.
inline u64 mod_det_symmetric(const std::vector<u64>& full, size_t n, const montgomery& mg) {
    std::vector<u64> a = full;  // row-major, only the lower triangle is maintained
    u64 det = mg.one;
    for (size_t k = 0; k < n; ++k) {
        u64 d = a[k * n + k];
        if (d == 0) return mod_det_general(full, n, mg);
        det = mg.mul(det, d);
        u64 dinv = mg.inv(d);
        for (size_t i = k + 1; i < n; ++i) {
            u64 f = mg.mul(a[i * n + k], dinv);
            if (f == 0) continue;
            u64* ai = &a[i * n];
            for (size_t j = k + 1; j <= i; ++j) ai[j] = mg.sub(ai[j], mg.mul(f, a[j * n + k]));
        }
    }
    return mg.from_mont(det);
}

// Coefficients (mod p, plain representation) of the unique polynomial of
// degree < m through (1, y_1), ..., (m, y_m); Newton's divided differences.
inline std::vector<u64> interpolate_mod(const std::vector<u64>& ys, const montgomery& mg) {
    size_t m = ys.size();
    if (m == 0) return {};
    std::vector<u64> dd(m);
    for (size_t i = 0; i < m; ++i) dd[i] = mg.to_mont(ys[i] % mg.p);
    std::vector<u64> step_inv(m + 1);
    for (size_t j = 1; j <= m; ++j) step_inv[j] = mg.inv(mg.to_mont(j % mg.p));
    // nodes x_i = i+1 are consecutive, so x_i - x_{i-j} = j
    for (size_t j = 1; j < m; ++j)
        for (size_t i = m; i-- > j;) dd[i] = mg.mul(mg.sub(dd[i], dd[i - 1]), step_inv[j]);
    // Horner expansion of the Newton form: c <- c*(x - x_i) + dd[i]
    std::vector<u64> coeffs(m, 0);
    coeffs[0] = dd[m - 1];
    size_t deg = 0;
    for (size_t i = m - 1; i-- > 0;) {
        u64 node = mg.to_mont((i + 1) % mg.p);
        ++deg;
        for (size_t j = deg; j >= 1; --j) coeffs[j] = mg.sub(j > 0 ? coeffs[j - 1] : 0, mg.mul(coeffs[j], node));
        coeffs[0] = mg.sub(dd[i], mg.mul(coeffs[0], node));
    }
    for (auto& c : coeffs) c = mg.from_mont(c);
    return coeffs;
}

// Incremental Chinese remainder reconstruction: values are accumulated as
// nonnegative residues modulo the growing product of primes; symmetric lift
// maps into (-M/2, M/2] for signed coefficients.
struct crt_accumulator {
    big_int value{0};
    big_int modulus{1};

    void add(u64 residue, u64 p) {
        u64 vp = value.mod_u64(p);
        u64 mp = modulus.mod_u64(p);
        // t = (residue - vp) * mp^{-1} mod p
        montgomery mg(p);
        u64 diff = residue >= vp ? residue - vp : residue + p - vp;
        u64 t = mg.from_mont(mg.mul(mg.to_mont(diff), mg.inv(mg.to_mont(mp))));
        value += modulus * big_int(static_cast<unsigned long long>(t));
        modulus *= big_int(static_cast<unsigned long long>(p));
    }

    big_int symmetric() const {
        big_int half = modulus >> 1;
        if (value > half) return value - modulus;
        return value;
    }
};

}  // namespace gramdet
