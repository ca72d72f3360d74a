#pragma once

#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "gramdet/bigint.hpp"

namespace gramdet {

// Exact rational number, always reduced, denominator > 0.
class rational {
public:
    rational() : num_(0), den_(1) {}
    rational(big_int n) : num_(std::move(n)), den_(1) {}  // NOLINT
    rational(long long n) : num_(n), den_(1) {}           // NOLINT
    rational(int n) : num_(n), den_(1) {}                 // NOLINT
    rational(big_int n, big_int d) : num_(std::move(n)), den_(std::move(d)) { reduce(); }

    static rational parse(std::string_view s) {
        auto slash = s.find('/');
        if (slash == std::string_view::npos) return rational(big_int::parse(s));
        return rational(big_int::parse(s.substr(0, slash)), big_int::parse(s.substr(slash + 1)));
    }

    const big_int& num() const { return num_; }
    const big_int& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_.is_one(); }
    int sign() const { return num_.sign(); }

    friend rational operator+(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator-(const rational& a, const rational& b) {
        return rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend rational operator*(const rational& a, const rational& b) {
        return rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational operator/(const rational& a, const rational& b) {
        if (b.is_zero()) throw std::domain_error("rational: division by zero");
        return rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    rational operator-() const {
        rational r = *this;
        r.num_ = -r.num_;
        return r;
    }
    rational& operator+=(const rational& o) { return *this = *this + o; }
    rational& operator-=(const rational& o) { return *this = *this - o; }
    rational& operator*=(const rational& o) { return *this = *this * o; }
    rational& operator/=(const rational& o) { return *this = *this / o; }

    friend bool operator==(const rational& a, const rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const rational& a, const rational& b) { return !(a == b); }
    friend bool operator<(const rational& a, const rational& b) {
        return (a - b).sign() < 0;
    }
    friend bool operator>(const rational& a, const rational& b) { return b < a; }
    friend bool operator<=(const rational& a, const rational& b) { return !(b < a); }
    friend bool operator>=(const rational& a, const rational& b) { return !(a < b); }

    rational abs() const { return sign() < 0 ? -*this : *this; }

    // Exact power with integer exponent (negative allowed for nonzero values).
    static rational pow(const rational& base, long long e) {
        if (e < 0) {
            if (base.is_zero()) throw std::domain_error("rational: 0 to negative power");
            return pow(rational(1) / base, -e);
        }
        rational r(1), b = base;
        while (e) {
            if (e & 1) r *= b;
            b *= b;
            e >>= 1;
        }
        return r;
    }

    // "p/q" with the "/q" omitted for integers; exact decimal rendering only.
    std::string to_string() const {
        if (den_.is_one()) return num_.to_string();
        return num_.to_string() + "/" + den_.to_string();
    }
    friend std::ostream& operator<<(std::ostream& os, const rational& v) { return os << v.to_string(); }

private:
    big_int num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational: zero denominator");
        if (den_.is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
        if (num_.is_zero()) {
            den_ = big_int(1);
            return;
        }
        big_int g = big_int::gcd(num_, den_);
        if (!g.is_one()) {
            num_ /= g;
            den_ /= g;
        }
    }
};

}  // namespace gramdet
