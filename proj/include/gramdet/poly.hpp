#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// Dense univariate polynomial over an exact coefficient ring.
// Coefficients are stored ascending; the representation is always normalized
// (no trailing zeros, the zero polynomial has an empty coefficient list).
template <typename T>
class polynomial {
public:
    polynomial() = default;
    explicit polynomial(std::vector<T> coeffs, std::string var = "n")
        : coeffs_(std::move(coeffs)), var_(std::move(var)) {
        normalize();
    }
    polynomial(const T& c, std::string var = "n") : var_(std::move(var)) {
        coeffs_.push_back(c);
        normalize();
    }

    static polynomial zero(std::string var = "n") { return polynomial(std::vector<T>{}, std::move(var)); }
    static polynomial one(std::string var = "n") { return polynomial(std::vector<T>{T(1)}, std::move(var)); }
    static polynomial variable(std::string var = "n") {
        return polynomial(std::vector<T>{T(0), T(1)}, std::move(var));
    }
    // n^e
    static polynomial monomial(size_t e, std::string var = "n") {
        std::vector<T> c(e + 1, T(0));
        c[e] = T(1);
        return polynomial(std::move(c), std::move(var));
    }

    const std::vector<T>& coeffs() const { return coeffs_; }
    const std::string& var() const { return var_; }
    void set_var(std::string v) { var_ = std::move(v); }

    bool is_zero() const { return coeffs_.empty(); }
    // degree of the zero polynomial reported as -1
    long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
    const T& leading() const {
        static const T zero_coeff = T(0);
        return coeffs_.empty() ? zero_coeff : coeffs_.back();
    }
    T coeff(size_t i) const { return i < coeffs_.size() ? coeffs_[i] : T(0); }

    friend bool operator==(const polynomial& a, const polynomial& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const polynomial& a, const polynomial& b) { return !(a == b); }

    friend polynomial operator+(const polynomial& a, const polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return polynomial(std::move(c), a.var_);
    }
    friend polynomial operator-(const polynomial& a, const polynomial& b) {
        std::vector<T> c(std::max(a.coeffs_.size(), b.coeffs_.size()), T(0));
        for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return polynomial(std::move(c), a.var_);
    }
    polynomial operator-() const {
        std::vector<T> c = coeffs_;
        for (auto& x : c) x = -x;
        return polynomial(std::move(c), var_);
    }
    friend polynomial operator*(const polynomial& a, const polynomial& b) {
        if (a.is_zero() || b.is_zero()) return zero(a.var_);
        std::vector<T> c(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
        for (size_t i = 0; i < a.coeffs_.size(); ++i)
            for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
        return polynomial(std::move(c), a.var_);
    }
    friend polynomial operator*(const polynomial& a, const T& s) {
        std::vector<T> c = a.coeffs_;
        for (auto& x : c) x = x * s;
        return polynomial(std::move(c), a.var_);
    }
    polynomial& operator+=(const polynomial& o) { return *this = *this + o; }
    polynomial& operator-=(const polynomial& o) { return *this = *this - o; }
    polynomial& operator*=(const polynomial& o) { return *this = *this * o; }

    template <typename V>
    V eval(const V& x) const {
        V acc = V(0);
        for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + V(coeffs_[i]);
        return acc;
    }

    polynomial derivative() const {
        if (coeffs_.size() <= 1) return zero(var_);
        std::vector<T> c(coeffs_.size() - 1);
        for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * T(static_cast<long long>(i));
        return polynomial(std::move(c), var_);
    }

    // Quotient under exact division, or nullopt when the division has a
    // remainder (or a non-exact leading division step for T = big_int).
    std::optional<polynomial> divide_exact(const polynomial& d) const {
        if (d.is_zero()) throw std::domain_error("polynomial: division by zero polynomial");
        if (is_zero()) return zero(var_);
        if (degree() < d.degree()) return std::nullopt;
        std::vector<T> rem = coeffs_;
        std::vector<T> q(coeffs_.size() - d.coeffs_.size() + 1, T(0));
        for (size_t qi = q.size(); qi-- > 0;) {
            T top = rem[qi + d.coeffs_.size() - 1];
            if (top == T(0)) continue;
            auto f = exact_coeff_div(top, d.leading());
            if (!f) return std::nullopt;
            q[qi] = *f;
            for (size_t j = 0; j < d.coeffs_.size(); ++j)
                rem[qi + j] = rem[qi + j] - *f * d.coeffs_[j];
        }
        for (const auto& c : rem)
            if (!(c == T(0))) return std::nullopt;
        return polynomial(std::move(q), var_);
    }

    // substitute x -> x^2 ... inverse: keep only even powers, mapping x^{2i} -> x^i.
    // Fails (nullopt) when an odd coefficient is present.
    std::optional<polynomial> even_part_as_square_root_variable() const {
        std::vector<T> c((coeffs_.size() + 1) / 2, T(0));
        for (size_t i = 0; i < coeffs_.size(); ++i) {
            if (i % 2 == 0)
                c[i / 2] = coeffs_[i];
            else if (!(coeffs_[i] == T(0)))
                return std::nullopt;
        }
        return polynomial(std::move(c), var_);
    }

    std::string to_string() const {
        if (is_zero()) return "0";
        std::string s;
        for (size_t i = coeffs_.size(); i-- > 0;) {
            if (coeffs_[i] == T(0)) continue;
            std::string c = coeff_str(coeffs_[i]);
            bool neg = !c.empty() && c[0] == '-';
            if (!s.empty()) {
                s += neg ? " - " : " + ";
                if (neg) c = c.substr(1);
            }
            if (i == 0) {
                s += c;
            } else {
                if (c != "1") {
                    if (c == "-1")
                        s += "-";
                    else
                        s += c + "*";
                }
                s += var_;
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const polynomial& p) { return os << p.to_string(); }

private:
    std::vector<T> coeffs_;
    std::string var_ = "n";

    void normalize() {
        while (!coeffs_.empty() && coeffs_.back() == T(0)) coeffs_.pop_back();
    }

    static std::optional<T> exact_coeff_div(const T& a, const T& b);
    static std::string coeff_str(const T& c);
};

template <>
inline std::optional<big_int> polynomial<big_int>::exact_coeff_div(const big_int& a, const big_int& b) {
    big_int q, r;
    big_int::divmod(a, b, q, r);
    if (!r.is_zero()) return std::nullopt;
    return q;
}
template <>
inline std::optional<rational> polynomial<rational>::exact_coeff_div(const rational& a, const rational& b) {
    return a / b;
}
template <>
inline std::string polynomial<big_int>::coeff_str(const big_int& c) {
    return c.to_string();
}
template <>
inline std::string polynomial<rational>::coeff_str(const rational& c) {
    return c.to_string();
}

using int_poly = polynomial<big_int>;
using rat_poly = polynomial<rational>;

inline rat_poly to_rational_poly(const int_poly& p) {
    std::vector<rational> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) c.emplace_back(x);
    return rat_poly(std::move(c), p.var());
}

// Integer witness of a rational-coefficient polynomial; nullopt if any
// coefficient has a nontrivial denominator.
inline std::optional<int_poly> to_integer_poly(const rat_poly& p) {
    std::vector<big_int> c;
    c.reserve(p.coeffs().size());
    for (const auto& x : p.coeffs()) {
        if (!x.is_integer()) return std::nullopt;
        c.push_back(x.num());
    }
    return int_poly(std::move(c), p.var());
}

// Unique polynomial of degree <= bound through the given points, as an
// integer polynomial. All points participate: extra points must be matched
// exactly or the fit is rejected. Throws on repeated x, a degree overflow,
// or non-integer coefficients.
inline int_poly interpolate_from_values(const std::vector<std::pair<big_int, big_int>>& points,
                                        long long degree_bound, const std::string& var = "n") {
    if (points.empty()) throw std::invalid_argument("interpolate: no points");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first) throw std::invalid_argument("interpolate: repeated node");

    // Newton divided differences over exact rationals.
    std::vector<rational> dd;
    dd.reserve(points.size());
    for (const auto& [x, y] : points) dd.emplace_back(y);
    for (size_t j = 1; j < points.size(); ++j)
        for (size_t i = points.size(); i-- > j;)
            dd[i] = (dd[i] - dd[i - 1]) / (rational(points[i].first) - rational(points[i - j].first));

    rat_poly acc = rat_poly::zero(var);
    for (size_t i = points.size(); i-- > 0;) {
        rat_poly shifted(std::vector<rational>{-rational(points[i].first), rational(1)}, var);
        acc = acc * shifted + rat_poly(dd[i], var);
    }
    if (acc.degree() > degree_bound)
        throw std::domain_error("interpolate: data requires degree " + std::to_string(acc.degree()) +
                                " > bound " + std::to_string(degree_bound));
    auto integral = to_integer_poly(acc);
    if (!integral) throw std::domain_error("interpolate: fit has non-integer coefficients");
    integral->set_var(var);
    return *integral;
}

// Primitive gcd of integer polynomials (monic-normalized Euclid over Q,
// integer content restored afterwards). Only used for rational-function
// reduction, never on the determinant path.
inline int_poly poly_gcd(const int_poly& a, const int_poly& b) {
    rat_poly x = to_rational_poly(a), y = to_rational_poly(b);
    while (!y.is_zero()) {
        // remainder of x by y
        rat_poly r = x;
        while (!r.is_zero() && r.degree() >= y.degree()) {
            rational f = r.leading() / y.leading();
            size_t shift = static_cast<size_t>(r.degree() - y.degree());
            r = r - y * rat_poly::monomial(shift, y.var()) * f;
        }
        x = y;
        y = r;
    }
    if (x.is_zero()) return int_poly::zero(a.var());
    // scale to primitive integer polynomial with positive leading coefficient
    big_int den(1);
    for (const auto& c : x.coeffs()) den = den / big_int::gcd(den, c.den()) * c.den();
    std::vector<big_int> ic;
    ic.reserve(x.coeffs().size());
    for (const auto& c : x.coeffs()) ic.push_back(c.num() * (den / c.den()));
    big_int content(0);
    for (const auto& c : ic) content = big_int::gcd(content, c);
    if (!content.is_zero())
        for (auto& c : ic) c /= content;
    if (!ic.empty() && ic.back().is_negative())
        for (auto& c : ic) c = -c;
    return int_poly(std::move(ic), a.var());
}

// Exact rational function p/q over Z[n], reduced, denominator primitive with
// positive leading coefficient.
class rational_function {
public:
    rational_function() : num_(int_poly::zero()), den_(int_poly::one()) {}
    explicit rational_function(int_poly p) : num_(std::move(p)), den_(int_poly::one()) {}
    rational_function(int_poly num, int_poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

    const int_poly& num() const { return num_; }
    const int_poly& den() const { return den_; }
    bool is_polynomial() const { return den_.degree() == 0 && den_.leading().is_one(); }

    // Polynomial witness after reduction, or nullopt.
    std::optional<int_poly> as_polynomial() const {
        if (den_.degree() != 0) return std::nullopt;
        return num_.divide_exact(den_);
    }

    friend rational_function operator*(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend rational_function operator/(const rational_function& a, const rational_function& b) {
        return rational_function(a.num_ * b.den_, a.den_ * b.num_);
    }

private:
    int_poly num_, den_;

    void reduce() {
        if (den_.is_zero()) throw std::domain_error("rational_function: zero denominator");
        if (num_.is_zero()) {
            den_ = int_poly::one(num_.var());
            return;
        }
        int_poly g = poly_gcd(num_, den_);
        if (g.degree() > 0 || !g.leading().is_one()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
        big_int content = big_int(0);
        for (const auto& c : num_.coeffs()) content = big_int::gcd(content, c);
        for (const auto& c : den_.coeffs()) content = big_int::gcd(content, c);
        if (!content.is_zero() && !content.is_one()) {
            num_ = *num_.divide_exact(int_poly(content, num_.var()));
            den_ = *den_.divide_exact(int_poly(content, den_.var()));
        }
        if (den_.leading().is_negative()) {
            num_ = -num_;
            den_ = -den_;
        }
    }
};

}  // namespace gramdet
