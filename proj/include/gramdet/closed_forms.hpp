#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/chebyshev.hpp"
#include "gramdet/epi.hpp"
#include "gramdet/partition.hpp"
#include "gramdet/poly.hpp"
#include "gramdet/rational.hpp"
#include "gramdet/young.hpp"

namespace gramdet {

// One factor of a closed-form determinant, carrying its display name.
struct det_factor {
    std::string name;
    int_poly poly;
    long long exp = 1;
};

// Determinant in factored form: n^monomial_exp * prod factors^exp. The
// monomial exponent may be negative (H+); expansion then divides it out and
// insists on an exact polynomial result.
struct factored_poly {
    long long monomial_exp = 0;
    std::vector<det_factor> factors;

    int_poly expand() const {
        int_poly acc = int_poly::one();
        for (const auto& f : factors) {
            if (f.exp < 0) throw std::domain_error("factored_poly: negative factor exponent");
            for (long long t = 0; t < f.exp; ++t) acc *= f.poly;
        }
        if (monomial_exp >= 0) return acc * int_poly::monomial(static_cast<size_t>(monomial_exp));
        auto witness = acc.divide_exact(int_poly::monomial(static_cast<size_t>(-monomial_exp)));
        if (!witness)
            throw std::domain_error("factored_poly: normalization failed, product is not a polynomial");
        return *witness;
    }
};

namespace detail {

inline int_poly falling_factorial_poly(int r) {  // n(n-1)...(n-r+1)
    int_poly acc = int_poly::one();
    for (int i = 0; i < r; ++i) acc *= int_poly(std::vector<big_int>{big_int(-i), big_int(1)});
    return acc;
}

inline long long a_k_of(category c, int k) { return compute_invariant_bundle(c, k).a_k.to_int64(); }

}  // namespace detail

// The closed-form Gram determinant of the category, assembled factor by
// factor: the block-count product for the semilattice cases, Young-diagram
// content products for o/b/o*, and the Chebyshev-family products with
// binomial-difference exponents in the free cases.
inline factored_poly closed_det(category c, int k) {
    factored_poly out;
    switch (c) {
        case category::s:
        case category::h:
        case category::h_star: {
            // product over P(k) of n!/(n-|pi|)!, grouped by block count
            auto ib = compute_invariant_bundle(c, k);
            for (int r = 1; r <= k; ++r) {
                long long mult = ib.stirling[static_cast<size_t>(r)].to_int64();
                if (mult == 0) continue;
                out.factors.push_back({"n!/(n-" + std::to_string(r) + ")!",
                                       detail::falling_factorial_poly(r), mult});
            }
            return out;
        }
        case category::o: {
            if (k % 2 != 0) return out;  // no pairings, 0x0 determinant
            for (const auto& lam : enumerate_diagrams(k / 2))
                out.factors.push_back({"f_n(" + lam.to_string() + ")", content_poly(lam, content_variant::O),
                                       dimension(double_diagram(lam)).to_int64()});
            return out;
        }
        case category::b: {
            out.monomial_exp = detail::a_k_of(c, k);
            for (int m = 1; 2 * m <= k; ++m)
                for (const auto& lam : enumerate_diagrams(m)) {
                    long long e = (binomial(k, 2 * m) * dimension(double_diagram(lam))).to_int64();
                    out.factors.push_back({"f'_n(" + lam.to_string() + ")",
                                           content_poly(lam, content_variant::B), e});
                }
            return out;
        }
        case category::o_star: {
            if (k % 2 != 0) return out;
            for (const auto& lam : enumerate_diagrams(k / 2)) {
                big_int f = dimension(lam);
                out.factors.push_back({"f''_n(" + lam.to_string() + ")",
                                       content_poly(lam, content_variant::Ostar), (f * f).to_int64()});
            }
            return out;
        }
        case category::o_plus: {
            out.monomial_exp = detail::a_k_of(c, k);  // always 0
            for (int r = 1; r <= k / 2; ++r) {
                long long d = exponent_d(1, rational(big_int(k), big_int(2)), r).to_int64();
                if (d) out.factors.push_back({"P_" + std::to_string(r), cheb(cheb_family::P, r), d});
            }
            return out;
        }
        case category::b_plus: {
            out.monomial_exp = detail::a_k_of(c, k);
            for (int r = 1; r <= k / 2; ++r) {
                long long e = 0;
                for (int l = 1; 2 * l <= k; ++l)
                    e += (binomial(k, 2 * l) * exponent_d(1, l, r)).to_int64();
                if (e) out.factors.push_back({"Q_" + std::to_string(r), cheb(cheb_family::Q, r), e});
            }
            return out;
        }
        case category::s_plus: {
            out.monomial_exp = detail::a_k_of(c, k);
            for (int r = 1; r <= k; ++r) {
                long long d = exponent_d(1, k, r).to_int64();
                // R_1 = 1 carries a formally positive exponent but no content
                if (d && cheb(cheb_family::R, r).degree() > 0)
                    out.factors.push_back({"R_" + std::to_string(r), cheb(cheb_family::R, r), d});
            }
            return out;
        }
        case category::h_plus: {
            out.monomial_exp = detail::a_k_of(c, k);  // negative from k = 4 on
            if (k % 2 != 0) return out;
            for (int r = 1; r <= k / 2; ++r) {
                long long d = exponent_d(2, rational(big_int(k), big_int(2)), r).to_int64();
                if (d) out.factors.push_back({"S_" + std::to_string(r), cheb(cheb_family::S, r), d});
            }
            return out;
        }
    }
    throw std::invalid_argument("closed_det: bad category");
}

// ---------------------------------------------------------------------------
// Square-root variant forms of the free-case determinants, evaluated at
// perfect squares n = m^2 and compared with the polynomial forms.

struct variant_check {
    category cat;
    int k = 0;
    long long m = 0;  // evaluation at n = m^2
    rational value_sqrt_form;
    rational value_poly_form;
    bool match = false;
};

// The sqrt-form reading of the free determinants:
//   s_plus: (sqrt n)^{a_k} prod_r P_r(sqrt n)^{d^1_{kr}}
//   h_plus: (sqrt n)^{a_k} prod_r P_r(sqrt n)^{2 d^2_{k/2,r}}
//   b_plus: n^{a_k} prod_r P_r(n-1)^{sum_l C(k,2l) d^1_{lr}}
// The exponent convention d_{kr} = f_{kr} - f_{k,r+1} is the one confirmed
// by the brute-force oracle.
inline variant_check closed_det_variant(category c, int k, long long m) {
    if (m < 2) throw std::invalid_argument("closed_det_variant: need m >= 2");
    variant_check vc;
    vc.cat = c;
    vc.k = k;
    vc.m = m;
    big_int n = big_int(m) * big_int(m);
    long long a_k = detail::a_k_of(c, k);

    rational sqrt_form(1);
    switch (c) {
        case category::s_plus: {
            sqrt_form = rational::pow(rational(big_int(m)), a_k);
            for (int r = 1; r <= k; ++r) {
                long long d = exponent_d(1, k, r).to_int64();
                if (d) sqrt_form *= rational::pow(rational(cheb(cheb_family::P, r).eval(big_int(m))), d);
            }
            break;
        }
        case category::h_plus: {
            sqrt_form = rational::pow(rational(big_int(m)), a_k);
            for (int r = 1; r <= k / 2; ++r) {
                long long d = exponent_d(2, rational(big_int(k), big_int(2)), r).to_int64();
                if (d) sqrt_form *= rational::pow(rational(cheb(cheb_family::P, r).eval(big_int(m))), 2 * d);
            }
            break;
        }
        case category::b_plus: {
            sqrt_form = rational::pow(rational(n), a_k);
            for (int r = 1; r <= k / 2; ++r) {
                long long e = 0;
                for (int l = 1; 2 * l <= k; ++l)
                    e += (binomial(k, 2 * l) * exponent_d(1, l, r)).to_int64();
                if (e) sqrt_form *= rational::pow(rational(cheb(cheb_family::P, r).eval(n - big_int(1))), e);
            }
            break;
        }
        case category::o_plus: {
            // identical to the polynomial form because a_k = 0
            sqrt_form = rational(closed_det(c, k).expand().eval(n));
            break;
        }
        default: throw std::invalid_argument("closed_det_variant: free categories only");
    }
    vc.value_sqrt_form = sqrt_form;
    vc.value_poly_form = rational(closed_det(c, k).expand().eval(n));
    vc.match = vc.value_sqrt_form == vc.value_poly_form;
    return vc;
}

// The alternative exponent reading printed in the O+ theorem,
// d_{kr} = f_{kr} - f_{k+1,r}; demonstrably wrong at k = 4, kept as a foil
// for the oracle.
inline rational o_plus_misprinted_reading(int k, const big_int& n) {
    rational acc(1);
    for (int r = 1; r <= k / 2; ++r) {
        big_int d = exponent_f(1, rational(big_int(k), big_int(2)), r) -
                    exponent_f(1, rational(big_int(k + 2), big_int(2)), r);
        acc *= rational::pow(rational(cheb(cheb_family::P, r).eval(n)), d.to_int64());
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Epi product formula: det(G_kn) = n^{a_k} prod over epi of F_r / F_{r-1}

// F_{r(sigma)} per category: P_{r/2} (o+), Q_{r/2} (b+), R_r (s+). Epi with
// r = 0 contribute 1. For b+ the odd-r epi carry no Chebyshev index and
// likewise contribute 1, so only the even-r counts telescope.
inline int_poly epi_det(category c, int k) {
    if (c != category::o_plus && c != category::b_plus && c != category::s_plus)
        throw std::invalid_argument("epi_det: supported for o_plus, b_plus, s_plus");
    auto counts = epi_counts(c, k);
    int_poly num = int_poly::one();
    std::vector<std::pair<int_poly, long long>> divisors;
    for (const auto& [r, count] : counts) {
        if (r == 0) continue;
        int_poly hi, lo;
        if (c == category::s_plus) {
            hi = cheb(cheb_family::R, r);
            lo = cheb(cheb_family::R, r - 1);
        } else {
            if (r % 2 != 0) continue;  // no factor attached to odd upper-leg counts
            cheb_family fam = c == category::o_plus ? cheb_family::P : cheb_family::Q;
            hi = cheb(fam, r / 2);
            lo = cheb(fam, r / 2 - 1);
        }
        for (long long t = 0; t < count; ++t) num *= hi;
        if (lo.degree() > 0) divisors.emplace_back(lo, count);
    }
    long long a_k = detail::a_k_of(c, k);
    num *= int_poly::monomial(static_cast<size_t>(a_k));  // a_k = b_k >= 0 here
    // every divisor is monic and divides the running product exactly
    for (const auto& [lo, count] : divisors)
        for (long long t = 0; t < count; ++t) {
            auto q = num.divide_exact(lo);
            if (!q) throw std::domain_error("epi_det: normalization failed, product is not a polynomial");
            num = std::move(*q);
        }
    return num;
}

// ---------------------------------------------------------------------------
// Trace, subleading coefficient, and the classical rewriting identity

// T_k(t) = sum_r S_kr t^r from enumeration
inline int_poly trace_poly(category c, int k) {
    auto ib = compute_invariant_bundle(c, k);
    std::vector<big_int> coeffs(ib.stirling.begin(), ib.stirling.end());
    return int_poly(std::move(coeffs), "t");
}

// closed formula for the H+ trace: T_2l(t) = sum_r (1/r) C(l-1,r-1) C(2l,r-1) t^r
inline int_poly h_plus_trace_formula(int l) {
    std::vector<big_int> coeffs(static_cast<size_t>(l) + 1, big_int(0));
    for (int r = 1; r <= l; ++r) {
        big_int v = binomial(l - 1, r - 1) * binomial(2 * l, r - 1);
        big_int q, rem;
        big_int::divmod(v, big_int(r), q, rem);
        if (!rem.is_zero()) throw std::logic_error("h_plus_trace_formula: non-integer coefficient");
        coeffs[static_cast<size_t>(r)] = q;
    }
    return int_poly(std::move(coeffs), "t");
}

struct subleading_data {
    big_int s_k;        // T_k'(1)
    big_int z_k;        // T_k''(1)
    big_int coefficient;  // of n^{s_k - 1} in the determinant
};

// Prop-3.2-style check material: the determinant's subleading coefficient
// must equal -z_k/2 for the semilattice categories.
inline subleading_data subleading_check(category c, int k) {
    if (c != category::s && c != category::h && c != category::h_star)
        throw std::invalid_argument("subleading_check: supported for s, h, h_star");
    int_poly trace = trace_poly(c, k);
    subleading_data out;
    out.s_k = trace.derivative().eval(big_int(1));
    out.z_k = trace.derivative().derivative().eval(big_int(1));
    int_poly det = closed_det(c, k).expand();
    long long deg = det.degree();
    out.coefficient = deg >= 1 ? det.coeff(static_cast<size_t>(deg) - 1) : big_int(0);
    return out;
}

// The rearranged classical form n^{a_k} prod n^{k-2|pi|} n!/(n-|pi|)! equals
// the plain product; the exponent bookkeeping a_k + sum(k - 2|pi|) = 0 is
// verified together with the polynomial identity.
inline bool classical_rewrite_identity(category c, int k) {
    if (c != category::s && c != category::h && c != category::h_star)
        throw std::invalid_argument("classical_rewrite_identity: supported for s, h, h_star");
    const auto& parts = partitions_of(c, k);
    long long a_k = detail::a_k_of(c, k);
    long long monomial = a_k;
    int_poly product = int_poly::one();
    for (const auto& p : parts) {
        monomial += k - 2ll * p.num_blocks();
        product *= detail::falling_factorial_poly(p.num_blocks());
    }
    if (monomial != 0) return false;
    return product == closed_det(c, k).expand();
}

}  // namespace gramdet
