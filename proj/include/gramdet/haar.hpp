#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/gram.hpp"
#include "gramdet/matrix.hpp"
#include "gramdet/partition.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// One matrix-coefficient moment: integral of u_{i_1 j_1} ... u_{i_k j_k}.
struct moment_query {
    int n = 0;
    std::vector<int> i, j;  // 1-based entries in 1..n

    void validate() const {
        if (i.size() != j.size()) throw std::invalid_argument("moment_query: tuple length mismatch");
        for (int v : i)
            if (v < 1 || v > n) throw std::invalid_argument("moment_query: index out of range");
        for (int v : j)
            if (v < 1 || v > n) throw std::invalid_argument("moment_query: index out of range");
    }
};

// (1/n!) sum over permutation matrices of the monomial; factorial enumeration.
inline rational haar_integrate_perm(const moment_query& q) {
    q.validate();
    if (q.n > 7) throw std::invalid_argument("haar_integrate_perm: n > 7 exceeds enumeration bound");
    if (q.i.empty()) return rational(1);
    std::vector<int> g(static_cast<size_t>(q.n));
    std::iota(g.begin(), g.end(), 1);
    long long hits = 0;
    do {
        bool match = true;
        for (size_t m = 0; m < q.i.size() && match; ++m)
            match = g[static_cast<size_t>(q.j[m]) - 1] == q.i[m];
        hits += match;
    } while (std::next_permutation(g.begin(), g.end()));
    return rational(big_int(hits), factorial(q.n));
}

// Average over the 2^n n! signed permutation matrices u = P diag(eps).
inline rational haar_integrate_hyperoct(const moment_query& q) {
    q.validate();
    if (q.n > 4) throw std::invalid_argument("haar_integrate_hyperoct: n > 4 exceeds enumeration bound");
    if (q.i.empty()) return rational(1);
    std::vector<int> g(static_cast<size_t>(q.n));
    std::iota(g.begin(), g.end(), 1);
    long long total = 0;
    do {
        bool match = true;
        for (size_t m = 0; m < q.i.size() && match; ++m)
            match = g[static_cast<size_t>(q.j[m]) - 1] == q.i[m];
        if (!match) continue;
        for (int mask = 0; mask < (1 << q.n); ++mask) {
            int sign = 1;
            for (size_t m = 0; m < q.j.size(); ++m)
                if (mask & (1 << (q.j[m] - 1))) sign = -sign;
            total += sign;
        }
    } while (std::next_permutation(g.begin(), g.end()));
    big_int order = factorial(q.n) * big_int(1ll << q.n);
    return rational(big_int(total), order);
}

// delta_pi(i) = 1 iff the tuple is constant on every block of pi.
inline bool delta_fits(const set_partition& p, const std::vector<int>& tuple) {
    if (static_cast<int>(tuple.size()) != p.points())
        throw std::invalid_argument("delta_fits: tuple length mismatch");
    std::vector<int> value(static_cast<size_t>(p.num_blocks()), 0);
    for (size_t t = 0; t < tuple.size(); ++t) {
        int b = p.block_of(static_cast<int>(t));
        if (value[b] == 0)
            value[b] = tuple[t];
        else if (value[b] != tuple[t])
            return false;
    }
    return true;
}

// Right-hand side of the Weingarten formula, with a caller-supplied
// Weingarten matrix so exhaustive tuple sweeps can reuse one inversion.
inline rational weingarten_sum(category c, int k, const rat_matrix& w, const std::vector<int>& i,
                               const std::vector<int>& j) {
    const auto& parts = partitions_of(c, k);
    rational acc(0);
    for (size_t a = 0; a < parts.size(); ++a) {
        if (!delta_fits(parts[a], i)) continue;
        for (size_t b = 0; b < parts.size(); ++b)
            if (delta_fits(parts[b], j)) acc += w(a, b);
    }
    return acc;
}

inline rational weingarten_sum(category c, int k, const big_int& n, const std::vector<int>& i,
                               const std::vector<int>& j) {
    if (c != category::s && c != category::h)
        throw std::invalid_argument("weingarten_sum: classical categories s, h only");
    const auto& parts = partitions_of(c, k);
    if (parts.empty()) return rational(0);
    return weingarten_sum(c, k, weingarten_matrix(c, k, n), i, j);
}

// Weingarten matrix from the Mobius-function formula
//   W(pi, sigma) = sum over tau <= pi ^ sigma in P(k) of
//                  mu(tau, pi) mu(tau, sigma) (n - |tau|)! / n!
// Must agree entrywise with the exact inverse of the Gram matrix.
inline rat_matrix mobius_weingarten(category c, int k, const big_int& n) {
    if (c != category::s && c != category::h)
        throw std::invalid_argument("mobius_weingarten: classical categories s, h only");
    const auto& parts = partitions_of(c, k);
    size_t sz = parts.size();
    // (n - r)!/n! = 1 / (n(n-1)...(n-r+1))
    std::vector<rational> weight(static_cast<size_t>(k) + 1);
    for (int r = 0; r <= k; ++r) weight[static_cast<size_t>(r)] = rational(big_int(1), falling_factorial_value(n, r));
    rat_matrix w(sz, sz);
    for (size_t a = 0; a < sz; ++a)
        for (size_t b = a; b < sz; ++b) {
            set_partition bound = meet(parts[a], parts[b]);
            rational acc(0);
            for (const auto& tau : parts) {
                if (!refines(tau, bound)) continue;
                long long mu_a = mobius(tau, parts[a]);
                long long mu_b = mobius(tau, parts[b]);
                acc += rational(big_int(mu_a) * big_int(mu_b)) * weight[static_cast<size_t>(tau.num_blocks())];
            }
            w(a, b) = acc;
            w(b, a) = acc;
        }
    return w;
}

// ---------------------------------------------------------------------------
// Grid operationalization of the asymptotic estimates: deviations must be
// non-increasing along the grid and the final deviation must sit below 10/n.

struct asymptotic_report {
    bool ok = true;
    std::string detail;
};

namespace detail {

inline asymptotic_report check_limit_on_grid(const std::vector<rational>& values, const rational& limit,
                                             const big_int& last_n, const std::string& label) {
    asymptotic_report rep;
    std::vector<rational> dev;
    dev.reserve(values.size());
    for (const auto& v : values) dev.push_back((v - limit).abs());
    for (size_t t = 1; t < dev.size(); ++t)
        if (dev[t] > dev[t - 1]) {
            rep.ok = false;
            rep.detail = label + ": deviation not monotone at grid step " + std::to_string(t);
            return rep;
        }
    rational bound(big_int(10), last_n);
    if (!(dev.back() < bound)) {
        rep.ok = false;
        rep.detail = label + ": final deviation " + dev.back().to_string() + " not below " + bound.to_string();
    }
    return rep;
}

}  // namespace detail

// W scaled by the predicted power against the Mobius limit (pi <= sigma), and
// the general order bound |W| n^{|pi|+|sigma|-|pi v sigma|} fitted on the grid.
// check_mu_limit = false restricts to the order bound; the 10/n deviation
// bound on the mu-limit is attainable only while the first-order constant of
// the Weingarten expansion stays below 10, which caps k per category.
inline asymptotic_report asymptotic_order_check(category c, int k, const set_partition& pi,
                                                const set_partition& sigma, const std::vector<big_int>& n_grid,
                                                bool check_mu_limit = true) {
    if (n_grid.size() < 3) throw std::invalid_argument("asymptotic_order_check: need at least 3 grid points");
    const auto& parts = partitions_of(c, k);
    size_t a = static_cast<size_t>(std::find(parts.begin(), parts.end(), pi) - parts.begin());
    size_t b = static_cast<size_t>(std::find(parts.begin(), parts.end(), sigma) - parts.begin());
    if (a == parts.size() || b == parts.size())
        throw std::invalid_argument("asymptotic_order_check: partition not in category");

    std::vector<rational> w_vals;
    for (const auto& n : n_grid) w_vals.push_back(weingarten_matrix(c, k, n)(a, b));

    std::string pair_label = category_name(c) + " k=" + std::to_string(k) + " (" + pi.to_string() + ", " +
                             sigma.to_string() + ")";

    if (check_mu_limit && refines(pi, sigma)) {
        std::vector<rational> scaled;
        for (size_t t = 0; t < n_grid.size(); ++t)
            scaled.push_back(w_vals[t] * rational(big_int::pow(n_grid[t], static_cast<unsigned long long>(pi.num_blocks()))));
        auto rep = detail::check_limit_on_grid(scaled, rational(big_int(mobius(pi, sigma))), n_grid.back(),
                                               pair_label + " mu-limit");
        if (!rep.ok) return rep;
    }

    // general order bound: scaled magnitude bounded and non-increasing at the tail
    long long power = pi.num_blocks() + sigma.num_blocks() - join_block_count(pi, sigma);
    std::vector<rational> scaled;
    for (size_t t = 0; t < n_grid.size(); ++t)
        scaled.push_back(w_vals[t].abs() * rational(big_int::pow(n_grid[t], static_cast<unsigned long long>(power))));
    asymptotic_report rep;
    if (scaled[scaled.size() - 1] > scaled[scaled.size() - 2]) {
        rep.ok = false;
        rep.detail = pair_label + ": order-bound magnitude increasing between the last grid points";
    }
    return rep;
}

// Second Prop-1.4 assertion: n^{|pi ^ sigma|} W -> mu(pi^sigma, pi) mu(pi^sigma, sigma).
inline asymptotic_report meet_limit_check(category c, int k, const set_partition& pi, const set_partition& sigma,
                                          const std::vector<big_int>& n_grid) {
    const auto& parts = partitions_of(c, k);
    size_t a = static_cast<size_t>(std::find(parts.begin(), parts.end(), pi) - parts.begin());
    size_t b = static_cast<size_t>(std::find(parts.begin(), parts.end(), sigma) - parts.begin());
    set_partition bound = meet(pi, sigma);
    rational limit(big_int(mobius(bound, pi)) * big_int(mobius(bound, sigma)));
    std::vector<rational> scaled;
    for (const auto& n : n_grid) {
        rational w = weingarten_matrix(c, k, n)(a, b);
        scaled.push_back(w * rational(big_int::pow(n, static_cast<unsigned long long>(bound.num_blocks()))));
    }
    return detail::check_limit_on_grid(scaled, limit, n_grid.back(),
                                       category_name(c) + " k=" + std::to_string(k) + " (" + pi.to_string() +
                                           ", " + sigma.to_string() + ") meet-limit");
}

}  // namespace gramdet
