#pragma once

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "gramdet/bigint.hpp"
#include "gramdet/chebyshev.hpp"
#include "gramdet/matrix.hpp"
#include "gramdet/modular.hpp"
#include "gramdet/parallel.hpp"
#include "gramdet/partition.hpp"
#include "gramdet/poly.hpp"
#include "gramdet/rational.hpp"

namespace gramdet {

// Join-block-count matrix |pi v sigma| over the canonical enumeration of
// P(k); cached because every G_kn over the same category reuses it, and it
// dominates construction cost. Read-only once built.
inline const std::vector<uint8_t>& gram_exponents(category c, int k) {
    static std::mutex mtx;
    static std::map<std::pair<int, int>, std::vector<uint8_t>> cache;
    const auto& parts = partitions_of(c, k);
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(static_cast<int>(c), k);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    size_t n = parts.size();
    std::vector<uint8_t> e(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
        e[i * n + i] = static_cast<uint8_t>(parts[i].num_blocks());
        for (size_t j = i + 1; j < n; ++j) {
            uint8_t v = static_cast<uint8_t>(join_block_count(parts[i], parts[j]));
            e[i * n + j] = v;
            e[j * n + i] = v;
        }
    }
    return cache.emplace(key, std::move(e)).first->second;
}

// G_kn with entries n^{|pi v sigma|}; 0x0 when the category has no
// partitions of k points.
inline int_matrix gram_matrix(category c, int k, const big_int& n) {
    if (n < big_int(1)) throw std::invalid_argument("gram_matrix: n must be >= 1");
    const auto& parts = partitions_of(c, k);
    const auto& e = gram_exponents(c, k);
    size_t sz = parts.size();
    std::vector<big_int> npow(static_cast<size_t>(k) + 1);
    npow[0] = big_int(1);
    for (size_t i = 1; i < npow.size(); ++i) npow[i] = npow[i - 1] * n;
    int_matrix g(sz, sz);
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) g(i, j) = npow[e[i * sz + j]];
    return g;
}

// Exact Weingarten matrix W_kn = G_kn^{-1}; throws singular_matrix_error at
// roots of the Gram determinant.
inline rat_matrix weingarten_matrix(category c, int k, const big_int& n) {
    return invert_rational(to_rational_matrix(gram_matrix(c, k, n)));
}

inline big_int gram_det_value(category c, int k, const big_int& n) {
    return det_exact(gram_matrix(c, k, n));
}

namespace detail {

// det of the Gram matrix mod p at evaluation point n_val
inline u64 gram_det_mod(const std::vector<uint8_t>& exps, size_t n, int k, u64 n_val, const montgomery& mg) {
    std::vector<u64> npow(static_cast<size_t>(k) + 1);
    npow[0] = mg.one;
    u64 base = mg.to_mont(n_val % mg.p);
    for (size_t i = 1; i < npow.size(); ++i) npow[i] = mg.mul(npow[i - 1], base);
    std::vector<u64> a(n * n);
    for (size_t i = 0; i < n * n; ++i) a[i] = npow[exps[i]];
    return mod_det_symmetric(a, n, mg);
}

inline u64 splitmix64(u64 x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace detail

// Gram determinant D_k(n) as an exact integer polynomial, by multi-point
// evaluation at the nodes n = 1..s_k+1 and interpolation. Each node value is
// a plain integer determinant; per-node work runs modulo a ladder of 62-bit
// primes whose CRT reconstruction is carried until it stabilizes and then
// confirmed against a fresh prime at a random evaluation point. Singular
// nodes are fine, the determinant value (possibly 0) is still exact.
inline const int_poly& gram_det_poly(category c, int k) {
    static std::mutex cache_mtx;
    static std::map<std::pair<int, int>, int_poly> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mtx);
        auto it = cache.find({static_cast<int>(c), k});
        if (it != cache.end()) return it->second;
    }

    const auto& parts = partitions_of(c, k);
    size_t sz = parts.size();
    long long s_k = 0;
    for (const auto& p : parts) s_k += p.num_blocks();

    int_poly result;
    if (sz == 0) {
        result = int_poly::one();
    } else {
        const auto& exps = gram_exponents(c, k);
        size_t nodes = static_cast<size_t>(s_k) + 1;

        std::vector<big_int> residues(nodes, big_int(0));
        big_int modulus(1);
        int_poly prev;
        bool have_prev = false;
        size_t prime_idx = 0;

        auto lift = [&]() {
            big_int half = modulus >> 1;
            std::vector<big_int> coeffs(nodes);
            for (size_t j = 0; j < nodes; ++j)
                coeffs[j] = residues[j] > half ? residues[j] - modulus : residues[j];
            return int_poly(std::move(coeffs), "n");
        };
        auto verify = [&](const int_poly& cand) {
            u64 q = nth_crt_prime(prime_idx);  // not consumed by the ladder yet
            montgomery mg(q);
            u64 probe = detail::splitmix64((static_cast<u64>(k) << 8) ^ static_cast<u64>(c) ^ 0xabcdefull) % q;
            if (probe < 2) probe += 2;
            u64 direct = detail::gram_det_mod(exps, sz, k, probe, mg);
            u64 horner = 0;
            u64 probe_m = mg.to_mont(probe);
            for (size_t j = cand.coeffs().size(); j-- > 0;) {
                const big_int& cj = cand.coeffs()[j];
                u64 r = cj.abs().mod_u64(q);
                if (cj.is_negative() && r) r = q - r;
                horner = mg.add(mg.mul(horner, probe_m), mg.to_mont(r));
            }
            return mg.from_mont(horner) == direct;
        };

        for (;;) {
            if (prime_idx > 300) throw std::logic_error("gram_det_poly: CRT ladder failed to stabilize");
            u64 p = nth_crt_prime(prime_idx++);
            montgomery mg(p);
            std::vector<u64> values(nodes);
            parallel_for(nodes, [&](size_t t) {
                values[t] = detail::gram_det_mod(exps, sz, k, static_cast<u64>(t) + 1, mg);
            });
            std::vector<u64> cf = interpolate_mod(values, mg);

            u64 mod_p = modulus.mod_u64(p);
            u64 minv = mg.from_mont(mg.inv(mg.to_mont(mod_p)));
            for (size_t j = 0; j < nodes; ++j) {
                u64 rj = residues[j].mod_u64(p);
                u64 diff = cf[j] >= rj ? cf[j] - rj : cf[j] + p - rj;
                u64 t = mg.from_mont(mg.mul(mg.to_mont(diff), mg.to_mont(minv)));
                if (t) residues[j] += modulus * big_int(static_cast<unsigned long long>(t));
            }
            modulus *= big_int(static_cast<unsigned long long>(p));

            int_poly current = lift();
            if (have_prev && current == prev && verify(current)) {
                result = std::move(current);
                break;
            }
            prev = std::move(current);
            have_prev = true;
        }
    }

    std::lock_guard<std::mutex> lock(cache_mtx);
    return cache.emplace(std::make_pair(static_cast<int>(c), k), std::move(result)).first->second;
}

// ---------------------------------------------------------------------------
// Mobius triangularization (the semilattice proof of the product formula)

struct triangular_form {
    std::vector<set_partition> order;  // refinement-compatible, finer partitions first
    int_matrix gprime;
};

// G'(pi, sigma) = sum over tau >= sigma in P(k) of mu(sigma, tau) n^{|pi v tau|}.
// For the semilattice categories s, h, h* this is n(n-1)...(n-|sigma|+1) when
// pi <= sigma and 0 otherwise, hence upper triangular in the returned order,
// and det(G') = det(G).
inline triangular_form mobius_triangularize(category c, int k, const big_int& n) {
    if (c != category::s && c != category::h && c != category::h_star)
        throw std::invalid_argument("mobius_triangularize: supported for s, h, h_star only");
    std::vector<set_partition> order = partitions_of(c, k);
    std::stable_sort(order.begin(), order.end(), [](const set_partition& a, const set_partition& b) {
        if (a.num_blocks() != b.num_blocks()) return a.num_blocks() > b.num_blocks();
        return a.rgs() < b.rgs();
    });
    size_t sz = order.size();

    // per column sigma: the tau >= sigma inside the category, with mu(sigma, tau)
    std::vector<std::vector<std::pair<size_t, long long>>> coarsenings(sz);
    for (size_t j = 0; j < sz; ++j)
        for (size_t t = 0; t < sz; ++t)
            if (refines(order[j], order[t])) coarsenings[j].emplace_back(t, mobius(order[j], order[t]));

    std::vector<big_int> npow(static_cast<size_t>(k) + 1);
    npow[0] = big_int(1);
    for (size_t i = 1; i < npow.size(); ++i) npow[i] = npow[i - 1] * n;

    int_matrix gp(sz, sz);
    for (size_t i = 0; i < sz; ++i)
        for (size_t j = 0; j < sz; ++j) {
            big_int acc(0);
            for (const auto& [t, mu] : coarsenings[j])
                acc += big_int(mu) * npow[static_cast<size_t>(join_block_count(order[i], order[t]))];
            gp(i, j) = acc;
        }
    return {std::move(order), std::move(gp)};
}

// ---------------------------------------------------------------------------
// Loop-model factorization G = T T^t over the noncrossing pairings

// h(i) = number of j <= i joined by pi to a point beyond i; a Dyck path.
inline std::vector<int> height_profile(const set_partition& pi) {
    if (!is_member(category::o_plus, pi))
        throw std::domain_error("height_profile: input must be a noncrossing pairing");
    int k = pi.points();
    std::vector<int> partner(static_cast<size_t>(k));
    {
        std::vector<int> first(static_cast<size_t>(pi.num_blocks()), -1);
        for (int i = 0; i < k; ++i) {
            int b = pi.block_of(i);
            if (first[b] < 0)
                first[b] = i;
            else {
                partner[static_cast<size_t>(first[b])] = i;
                partner[static_cast<size_t>(i)] = first[b];
            }
        }
    }
    std::vector<int> h(static_cast<size_t>(k) + 1, 0);
    for (int i = 1; i <= k; ++i) h[static_cast<size_t>(i)] = h[i - 1] + (partner[i - 1] > i - 1 ? 1 : -1);
    return h;
}

struct loop_check_failure {
    std::string kind;  // "triangularity" | "gram_entry" | "det" | "exponent_count"
    std::string pi, sigma;
    std::string expected, actual;
};

struct loop_check_report {
    int k = 0;
    big_int n;
    bool triangular_ok = true;
    bool gram_ok = true;
    bool det_ok = true;
    bool counts_ok = true;
    big_int det_gram;
    rational det_t_squared;
    std::vector<loop_check_failure> failures;
    bool ok() const { return triangular_ok && gram_ok && det_ok && counts_ok; }
};

namespace detail {

// floor(sqrt(x) * 10^digits) for a nonnegative rational x
inline big_int scaled_sqrt(const rational& x, int digits) {
    big_int scale = big_int::pow(big_int(10), static_cast<unsigned long long>(digits));
    return big_int::isqrt(x.num() * scale * scale / x.den());
}

}  // namespace detail

// Realizes the proof-of-factorization checks for O+: builds T from the spin
// factors along the height profiles, verifies exact lower triangularity in
// the pointwise height order, verifies G = T T^t entrywise numerically, and
// verifies det(T)^2 = det(G) exactly twice over (diagonal product, and the
// counted Chebyshev exponents). T entries are kept as exact rational
// radicands; the only floating step is the redundant full-matrix identity,
// evaluated at 60 decimal digits.
inline loop_check_report loop_factorization_check(int k, const big_int& n) {
    if (k % 2 != 0 || k < 2) throw std::invalid_argument("loop_factorization_check: k must be even and positive");
    if (n < big_int(2)) throw std::invalid_argument("loop_factorization_check: need n >= 2");
    loop_check_report rep;
    rep.k = k;
    rep.n = n;

    std::vector<set_partition> pairings = partitions_of(category::o_plus, k);
    size_t sz = pairings.size();
    std::vector<std::vector<int>> heights(sz);
    for (size_t i = 0; i < sz; ++i) heights[i] = height_profile(pairings[i]);

    // height-compatible order: total height ascending, then canonical form
    std::vector<size_t> idx(sz);
    std::iota(idx.begin(), idx.end(), 0);
    auto total_height = [&](size_t i) {
        long long s = 0;
        for (int h : heights[i]) s += h;
        return s;
    };
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
        long long ha = total_height(a), hb = total_height(b);
        if (ha != hb) return ha < hb;
        return pairings[a].rgs() < pairings[b].rgs();
    });

    std::vector<big_int> pval(static_cast<size_t>(k / 2) + 1);
    for (int r = 0; r <= k / 2; ++r) pval[static_cast<size_t>(r)] = cheb(cheb_family::P, r).eval(n);

    // pairs of each pi as (opener, closer), 1-based
    auto pair_list = [&](const set_partition& p) {
        std::vector<std::pair<int, int>> ps;
        for (const auto& bl : p.blocks()) ps.emplace_back(bl[0], bl[1]);
        return ps;
    };

    // radicand of T(pi, sigma): product of P_{h_sigma(i)} / P_{h_sigma(i-1)}
    // over pairs (i, j) of pi, provided the loop edges match up
    auto radicand = [&](size_t pi_i, size_t sigma_i) -> rational {
        const auto& h = heights[sigma_i];
        rational acc(1);
        for (auto [i, j] : pair_list(pairings[pi_i])) {
            if (h[static_cast<size_t>(i - 1)] != h[static_cast<size_t>(j)] ||
                h[static_cast<size_t>(i)] != h[static_cast<size_t>(j - 1)])
                return rational(0);
            acc *= rational(pval[static_cast<size_t>(h[static_cast<size_t>(i)])],
                            pval[static_cast<size_t>(h[static_cast<size_t>(i - 1)])]);
        }
        return acc;
    };

    std::vector<rational> rad(sz * sz);
    for (size_t a = 0; a < sz; ++a)
        for (size_t b = 0; b < sz; ++b) rad[a * sz + b] = radicand(idx[a], idx[b]);

    // (a) exact structural triangularity: sigma not <= pi pointwise => 0
    for (size_t a = 0; a < sz; ++a)
        for (size_t b = 0; b < sz; ++b) {
            const auto& hp = heights[idx[a]];
            const auto& hs = heights[idx[b]];
            bool below = true;
            for (size_t t = 0; t < hp.size(); ++t)
                if (hs[t] > hp[t]) {
                    below = false;
                    break;
                }
            if (!below && !rad[a * sz + b].is_zero()) {
                rep.triangular_ok = false;
                rep.failures.push_back({"triangularity", pairings[idx[a]].to_string(),
                                        pairings[idx[b]].to_string(), "0",
                                        rad[a * sz + b].to_string()});
            }
        }

    // (c) det(T)^2 = det(G) exactly, via the triangular diagonal...
    rep.det_gram = gram_det_value(category::o_plus, k, n);
    rational diag_prod(1);
    for (size_t a = 0; a < sz; ++a) diag_prod *= rad[a * sz + a];
    rep.det_t_squared = diag_prod;
    if (!(diag_prod == rational(rep.det_gram))) {
        rep.det_ok = false;
        rep.failures.push_back({"det", "", "", rep.det_gram.to_string(), diag_prod.to_string()});
    }
    // ...and via the counted exponents e_{kr} from the height profiles
    {
        std::vector<long long> count(static_cast<size_t>(k / 2) + 2, 0);
        for (size_t i = 0; i < sz; ++i)
            for (auto [a, b] : pair_list(pairings[i])) {
                (void)b;
                ++count[static_cast<size_t>(heights[i][static_cast<size_t>(a)])];
            }
        for (int r = 1; r <= k / 2; ++r) {
            big_int expected = exponent_f(1, k / 2, r);
            if (expected != big_int(count[static_cast<size_t>(r)])) {
                rep.counts_ok = false;
                rep.failures.push_back({"exponent_count", "r=" + std::to_string(r), "",
                                        expected.to_string(), std::to_string(count[static_cast<size_t>(r)])});
            }
        }
        rational via_exponents(1);
        for (int r = 1; r <= k / 2; ++r) {
            long long e = count[static_cast<size_t>(r)] - count[static_cast<size_t>(r) + 1];
            via_exponents *= rational::pow(rational(pval[static_cast<size_t>(r)]), e);
        }
        if (!(via_exponents == rational(rep.det_gram))) {
            rep.counts_ok = false;
            rep.failures.push_back(
                {"det", "exponent-product", "", rep.det_gram.to_string(), via_exponents.to_string()});
        }
    }

    // (b) G = T T^t entrywise, numerically at 60 digits, tolerance 1e-9 relative
    {
        const int digits = 60;
        big_int scale = big_int::pow(big_int(10), digits);
        std::vector<big_int> root(sz * sz);
        for (size_t i = 0; i < sz * sz; ++i)
            root[i] = rad[i].is_zero() ? big_int(0) : detail::scaled_sqrt(rad[i], digits);
        const auto& exps = gram_exponents(category::o_plus, k);
        const auto& parts = partitions_of(category::o_plus, k);
        // map from canonical enumeration position to height-order position
        std::vector<size_t> pos(sz);
        for (size_t a = 0; a < sz; ++a) pos[idx[a]] = a;
        for (size_t i = 0; i < sz; ++i)
            for (size_t j = 0; j < sz; ++j) {
                big_int sum(0);
                for (size_t t = 0; t < sz; ++t) sum += root[pos[i] * sz + t] * root[pos[j] * sz + t];
                big_int expected = big_int::pow(n, static_cast<unsigned long long>(exps[i * sz + j])) * scale * scale;
                big_int diff = (sum - expected).abs();
                // |diff| / expected <= 1e-9
                if (diff * big_int::pow(big_int(10), 9) > expected) {
                    rep.gram_ok = false;
                    rep.failures.push_back({"gram_entry", parts[i].to_string(), parts[j].to_string(),
                                            expected.to_string(), sum.to_string()});
                }
            }
    }
    return rep;
}

}  // namespace gramdet
