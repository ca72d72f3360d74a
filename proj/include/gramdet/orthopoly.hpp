#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/partition.hpp"
#include "gramdet/poly.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// Exact moment sequence m_0, m_1, ..., m_D with its provenance.
struct moment_sequence {
    std::vector<rational> m;
    std::string provenance;

    const rational& operator[](size_t j) const {
        if (j >= m.size()) throw std::out_of_range("moment_sequence: moment m_" + std::to_string(j) + " missing");
        return m[j];
    }
    size_t depth() const { return m.empty() ? 0 : m.size() - 1; }

    // moment functional L applied to a polynomial in the underlying variable
    rational functional(const rat_poly& p) const {
        rational acc(0);
        for (size_t j = 0; j < p.coeffs().size(); ++j) acc += p.coeffs()[j] * (*this)[j];
        return acc;
    }
};

// Raised when a gamma value vanishes, i.e. the moment sequence is degenerate
// at that index.
class degenerate_moments_error : public std::domain_error {
public:
    explicit degenerate_moments_error(size_t index)
        : std::domain_error("degenerate moment sequence: gamma_" + std::to_string(index) + " = 0"),
          index_(index) {}
    size_t index() const { return index_; }

private:
    size_t index_;
};

// Monic orthogonal polynomials and their Jacobi parameters:
//   Q_{k+1} = (n - alpha_k) Q_k - beta_k Q_{k-1},  gamma_k = L(n^k Q_k),
//   alpha_k = L(n^{k+1} Q_k)/gamma_k - L(n^k Q_{k-1})/gamma_{k-1},
//   beta_k  = gamma_k / gamma_{k-1}.
struct jacobi_data {
    std::vector<rational> alpha;  // alpha_0 .. alpha_{depth-1}
    std::vector<rational> beta;   // beta_1 .. beta_depth at index 1..; beta[0] unused = 0
    std::vector<rational> gamma;  // gamma_0 .. gamma_depth
    std::vector<rat_poly> q;      // Q_0 .. Q_depth
};

inline jacobi_data jacobi_from_moments(const moment_sequence& m, size_t depth) {
    if (m.depth() < 2 * depth)
        throw std::invalid_argument("jacobi_from_moments: need moments up to m_" + std::to_string(2 * depth));
    jacobi_data jd;
    jd.q.push_back(rat_poly::one());
    jd.beta.push_back(rational(0));
    rat_poly x = rat_poly::variable();

    auto gamma_of = [&](size_t k) {  // L(n^k Q_k)
        return m.functional(rat_poly::monomial(k) * jd.q[k]);
    };
    jd.gamma.push_back(gamma_of(0));
    if (jd.gamma[0].is_zero()) throw degenerate_moments_error(0);

    for (size_t k = 0; k < depth; ++k) {
        rational a = m.functional(rat_poly::monomial(k + 1) * jd.q[k]) / jd.gamma[k];
        if (k > 0) a -= m.functional(rat_poly::monomial(k) * jd.q[k - 1]) / jd.gamma[k - 1];
        jd.alpha.push_back(a);
        rat_poly next = (x - rat_poly(a)) * jd.q[k];
        if (k > 0) {
            rational b = jd.gamma[k] / jd.gamma[k - 1];
            jd.beta.push_back(b);
            next = next - jd.q[k - 1] * b;
        }
        jd.q.push_back(next);
        jd.gamma.push_back(gamma_of(k + 1));
        if (jd.gamma.back().is_zero() && k + 1 < depth) throw degenerate_moments_error(k + 1);
    }
    if (depth >= 1) jd.beta.push_back(jd.gamma[depth] / jd.gamma[depth - 1]);
    return jd;
}

// L(Q_a Q_b) = 0 for a != b, and L(Q_a^2) = gamma_a > 0.
inline bool orthogonality_check(const jacobi_data& jd, const moment_sequence& m) {
    for (size_t a = 0; a < jd.q.size(); ++a) {
        for (size_t b = 0; b < a; ++b)
            if (!m.functional(jd.q[a] * jd.q[b]).is_zero()) return false;
        if (2 * a <= m.depth()) {
            rational sq = m.functional(jd.q[a] * jd.q[a]);
            if (sq != jd.gamma[a] || !(sq > rational(0))) return false;
        }
    }
    return true;
}

// The seven recurrence families; the B recurrence is read with Q_k in both
// places, validated downstream against the enumerated moments.
enum class op_family { O, B, Ostar, S, Oplus, Bplus, Splus };

inline std::vector<rat_poly> recurrence_polys(op_family f, size_t depth) {
    std::vector<rat_poly> q;
    rat_poly x = rat_poly::variable();
    rat_poly one = rat_poly::one();
    q.push_back(one);
    if (depth == 0) return q;
    switch (f) {
        case op_family::O:
        case op_family::Ostar:
        case op_family::Oplus: q.push_back(x); break;
        default: q.push_back(x - one); break;
    }
    for (size_t k = 1; k < depth; ++k) {
        rat_poly next;
        rational kk(big_int(static_cast<long long>(k)));
        switch (f) {
            case op_family::O: next = x * q[k] - q[k - 1] * kk; break;
            case op_family::B: next = (x - one) * q[k] - q[k - 1] * kk; break;
            case op_family::Ostar: next = x * q[k] - q[k - 1] * rational(static_cast<long long>((k + 1) / 2)); break;
            case op_family::S: next = (x - rat_poly(rational(static_cast<long long>(k + 1)))) * q[k] - q[k - 1] * kk; break;
            case op_family::Oplus: next = x * q[k] - q[k - 1]; break;
            case op_family::Bplus: next = (x - one) * q[k] - q[k - 1]; break;
            case op_family::Splus: next = (x - rat_poly(rational(2))) * q[k] - q[k - 1]; break;
        }
        q.push_back(next);
    }
    return q;
}

inline category op_family_category(op_family f) {
    switch (f) {
        case op_family::O: return category::o;
        case op_family::B: return category::b;
        case op_family::Ostar: return category::o_star;
        case op_family::S: return category::s;
        case op_family::Oplus: return category::o_plus;
        case op_family::Bplus: return category::b_plus;
        case op_family::Splus: return category::s_plus;
    }
    throw std::invalid_argument("op_family_category: bad family");
}

// Character moments m_j = b_j = #P(j), by enumeration.
inline moment_sequence moments(category c, int max_degree) {
    moment_sequence ms;
    ms.provenance = "enumerated " + category_name(c) + " partition counts";
    for (int j = 0; j <= max_degree; ++j)
        ms.m.emplace_back(big_int(static_cast<long long>(partitions_of(c, j).size())));
    return ms;
}

// Fuss-Catalan closed form for the even H+ moments: c_l = C(3l, l)/(2l+1).
inline big_int fuss_catalan(int l) {
    big_int q, r;
    big_int::divmod(binomial(3ll * l, l), big_int(2ll * l + 1), q, r);
    if (!r.is_zero()) throw std::logic_error("fuss_catalan: non-integer");
    return q;
}

inline moment_sequence h_plus_moments_closed(int max_degree) {
    moment_sequence ms;
    ms.provenance = "Fuss-Catalan closed form";
    for (int j = 0; j <= max_degree; ++j)
        ms.m.emplace_back(j % 2 ? big_int(0) : fuss_catalan(j / 2));
    return ms;
}

// Conjectured closed form for the H+ beta parameters, comparison target only.
inline rational h_plus_beta_conjecture(long long k) {
    big_int num = k % 2 == 0 ? big_int(3) * big_int(3 * k - 1) * big_int(3 * k + 2)
                             : big_int(3) * big_int(3 * k - 2) * big_int(3 * k + 1);
    big_int den = big_int(4) * big_int(2 * k - 1) * big_int(2 * k + 1);
    return rational(num, den);
}

struct hnplus_row {
    long long k = 0;
    rational gamma;
    rational beta;
    rational beta_conjectured;
    bool match = false;
};

// Jacobi data of the free Bessel character law: the measure is symmetric, so
// alpha = 0 and Q_{k+1} = n Q_k - beta_k Q_{k-1}. Moments come from
// enumeration up to the requested bound and from the Fuss-Catalan closed form
// beyond it; each computed beta_k is compared against the conjectured form.
inline std::vector<hnplus_row> hnplus_jacobi(size_t depth, int enumerate_up_to = 16) {
    moment_sequence ms;
    ms.provenance = "h_plus moments";
    for (size_t j = 0; j <= 2 * depth; ++j) {
        if (static_cast<int>(j) <= enumerate_up_to)
            ms.m.emplace_back(big_int(static_cast<long long>(partitions_of(category::h_plus, static_cast<int>(j)).size())));
        else
            ms.m.emplace_back(j % 2 ? big_int(0) : fuss_catalan(static_cast<int>(j) / 2));
    }
    jacobi_data jd = jacobi_from_moments(ms, depth);
    std::vector<hnplus_row> rows;
    for (size_t k = 1; k <= depth; ++k) {
        hnplus_row row;
        row.k = static_cast<long long>(k);
        row.gamma = jd.gamma[k];
        row.beta = jd.beta[k];
        row.beta_conjectured = h_plus_beta_conjecture(row.k);
        row.match = row.beta == row.beta_conjectured;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace gramdet
