#pragma once

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/poly.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// The four polynomial families organizing the free-case determinant factors.
//   P: P_0 = 1, P_1 = n, P_{r+1} = n P_r - P_{r-1}        (Chebyshev type)
//   Q: Q_r(n) = P_r(n - 1), generated by its own recurrence
//   R: R_0 = R_1 = 1, R_2 = n - 1, R_3 = n - 2, R_{r+2} = (n - 2) R_r - R_{r-2}
//   S: S_r(m) = m^[r/2] * P_r(sqrt m)^2, expanded as a polynomial in m
enum class cheb_family { P, Q, R, S };

inline const int_poly& cheb(cheb_family f, int r) {
    if (r < 0) throw std::invalid_argument("cheb: negative index");
    static std::recursive_mutex mtx;  // the S family recurses into P
    static std::vector<int_poly> tp, tq, tr, ts;
    std::lock_guard<std::recursive_mutex> lock(mtx);

    auto n_poly = int_poly::variable();
    auto extend_three_term = [&](std::vector<int_poly>& tab, const int_poly& mult, int upto) {
        while (static_cast<int>(tab.size()) <= upto) {
            size_t m = tab.size();
            tab.push_back(mult * tab[m - 1] - tab[m - 2]);
        }
    };

    switch (f) {
        case cheb_family::P: {
            if (tp.empty()) tp = {int_poly::one(), n_poly};
            extend_three_term(tp, n_poly, r);
            return tp[static_cast<size_t>(r)];
        }
        case cheb_family::Q: {
            auto n_minus_1 = int_poly(std::vector<big_int>{big_int(-1), big_int(1)});
            if (tq.empty()) tq = {int_poly::one(), n_minus_1};
            extend_three_term(tq, n_minus_1, r);
            return tq[static_cast<size_t>(r)];
        }
        case cheb_family::R: {
            auto n_minus_2 = int_poly(std::vector<big_int>{big_int(-2), big_int(1)});
            if (tr.empty())
                tr = {int_poly::one(), int_poly::one(),
                      int_poly(std::vector<big_int>{big_int(-1), big_int(1)}),
                      int_poly(std::vector<big_int>{big_int(-2), big_int(1)})};
            while (static_cast<int>(tr.size()) <= r) {
                size_t m = tr.size();
                tr.push_back(n_minus_2 * tr[m - 2] - tr[m - 4]);
            }
            return tr[static_cast<size_t>(r)];
        }
        case cheb_family::S: {
            while (static_cast<int>(ts.size()) <= r) {
                int rr = static_cast<int>(ts.size());
                // build from the defining identity; P_rr(x)^2 is even in x,
                // so substituting x^2 -> m is exact by construction
                int_poly p2 = cheb(cheb_family::P, rr);  // recursion fills tp first
                p2 = p2 * p2;
                auto in_m = p2.even_part_as_square_root_variable();
                if (!in_m) throw std::logic_error("cheb: S-family square not even");
                ts.push_back(int_poly::monomial(static_cast<size_t>(rr / 2)) * *in_m);
            }
            return ts[static_cast<size_t>(r)];
        }
    }
    throw std::invalid_argument("cheb: bad family");
}

inline std::string cheb_family_name(cheb_family f) {
    switch (f) {
        case cheb_family::P: return "P";
        case cheb_family::Q: return "Q";
        case cheb_family::R: return "R";
        case cheb_family::S: return "S";
    }
    return "?";
}

// f^i_{kr} = C((i+1)k, k-r) - C((i+1)k, k-r-1), zero for non-integer k.
// i = 1 drives the O+/B+/S+ exponents, i = 2 the H+ (Fuss-Catalan) ones.
inline big_int exponent_f(int i, const rational& k, long long r) {
    if (i != 1 && i != 2) throw std::invalid_argument("exponent_f: family index must be 1 or 2");
    if (!k.is_integer()) return big_int(0);
    long long kk = k.num().to_int64();
    return binomial((i + 1) * kk, kk - r) - binomial((i + 1) * kk, kk - r - 1);
}
inline big_int exponent_f(int i, long long k, long long r) { return exponent_f(i, rational(k), r); }

// d^i_{kr} = f^i_{kr} - f^i_{k,r+1}
inline big_int exponent_d(int i, const rational& k, long long r) {
    return exponent_f(i, k, r) - exponent_f(i, k, r + 1);
}
inline big_int exponent_d(int i, long long k, long long r) { return exponent_d(i, rational(k), r); }

}  // namespace gramdet
