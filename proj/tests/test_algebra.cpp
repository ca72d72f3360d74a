#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gramdet/bigint.hpp"
#include "gramdet/matrix.hpp"
#include "gramdet/modular.hpp"
#include "gramdet/poly.hpp"
#include "gramdet/rational.hpp"

using namespace gramdet;

TEST_CASE("big_int arithmetic and decimal round trip") {
    big_int a = big_int::parse("123456789012345678901234567890");
    big_int b = big_int::parse("-987654321098765432109876543210");
    CHECK((a + b).to_string() == "-864197532086419753208641975320");
    CHECK((a * b).to_string() == "-121932631137021795226185032733622923332237463801111263526900");
    CHECK(big_int::parse((a * a).to_string()) == a * a);
    CHECK(big_int(0).to_string() == "0");
    CHECK(big_int(-7).to_string() == "-7");
}

TEST_CASE("big_int divmod properties against machine arithmetic") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 50000; ++t) {
        long long x = static_cast<long long>(rng() >> 2) - (1ll << 61);
        long long y = static_cast<long long>(rng() >> 40) + 1;
        if (rng() & 1) y = -y;
        big_int q, r;
        big_int::divmod(big_int(x), big_int(y), q, r);
        CHECK(q.to_int64() == x / y);
        CHECK(r.to_int64() == x % y);
    }
    for (int t = 0; t < 5000; ++t) {
        auto rand_big = [&](int limbs) {
            big_int v(0);
            for (int i = 0; i < limbs; ++i)
                v = (v << 32) + big_int(static_cast<unsigned long long>(static_cast<uint32_t>(rng())));
            return rng() & 1 ? -v : v;
        };
        big_int x = rand_big(1 + static_cast<int>(rng() % 9));
        big_int y = rand_big(1 + static_cast<int>(rng() % 6));
        if (y.is_zero()) continue;
        big_int q, r;
        big_int::divmod(x, y, q, r);
        CHECK(q * y + r == x);
        CHECK(r.abs() < y.abs());
        if (!r.is_zero()) CHECK(r.sign() == x.sign());
    }
}

TEST_CASE("big_int isqrt, gcd, pow, mod_u64") {
    CHECK(big_int::isqrt(big_int(0)) == big_int(0));
    CHECK(big_int::isqrt(big_int(1)) == big_int(1));
    std::mt19937_64 rng(11);
    for (int t = 0; t < 2000; ++t) {
        big_int x(static_cast<unsigned long long>(rng() >> 10));
        big_int s = big_int::isqrt(x);
        CHECK(s * s <= x);
        CHECK((s + big_int(1)) * (s + big_int(1)) > x);
    }
    CHECK(big_int::gcd(big_int(48), big_int(-18)) == big_int(6));
    CHECK(big_int::gcd(factorial(20), factorial(15)) == factorial(15));
    CHECK(big_int::pow(big_int(3), 20).to_string() == "3486784401");
    big_int big = big_int::parse("123456789123456789123456789");
    CHECK(big.mod_u64(1000000007ull) == 308641892ull);
    CHECK(binomial(36, 12).to_string() == "1251677700");
}

TEST_CASE("rational reduction and ordering") {
    rational r(big_int(6), big_int(-4));
    CHECK(r.to_string() == "-3/2");
    CHECK(rational::parse("11/6") == rational(big_int(11), big_int(6)));
    CHECK(rational(big_int(1), big_int(3)) + rational(big_int(1), big_int(6)) == rational(big_int(1), big_int(2)));
    CHECK(rational(1) / rational(3) < rational(1) / rational(2));
    CHECK(rational::pow(rational(big_int(2), big_int(3)), -2) == rational(big_int(9), big_int(4)));
    CHECK_THROWS_AS(rational(big_int(1), big_int(0)), std::domain_error);
}

TEST_CASE("polynomial arithmetic and exact division") {
    int_poly p(std::vector<big_int>{big_int(-1), big_int(0), big_int(1)});
    int_poly d(std::vector<big_int>{big_int(-1), big_int(1)});
    auto q = p.divide_exact(d);
    REQUIRE(q.has_value());
    CHECK(q->to_string() == "n + 1");
    CHECK_FALSE(p.divide_exact(int_poly(std::vector<big_int>{big_int(1), big_int(1), big_int(1)})).has_value());
    CHECK(p.eval(big_int(5)) == big_int(24));
    CHECK(p.derivative().to_string() == "2*n");
    // composition via eval over the polynomial ring
    int_poly shift(std::vector<big_int>{big_int(-1), big_int(1)});
    CHECK(p.eval(shift).to_string() == "n^2 - 2*n");
}

TEST_CASE("interpolation: spec examples and left inverse to evaluation") {
    using pts = std::vector<std::pair<big_int, big_int>>;
    CHECK(interpolate_from_values(pts{{0, 0}, {1, 1}, {2, 4}}, 2).to_string() == "n^2");
    CHECK(interpolate_from_values(pts{{1, 1}, {2, 1}}, 0).to_string() == "1");
    CHECK_THROWS_AS(interpolate_from_values(pts{{0, 0}, {1, 0}, {2, 2}}, 1), std::domain_error);
    CHECK_THROWS_AS(interpolate_from_values(pts{{1, 1}, {1, 2}}, 1), std::invalid_argument);

    std::mt19937_64 rng(23);
    for (int t = 0; t < 300; ++t) {
        int deg = static_cast<int>(rng() % 9);
        std::vector<big_int> coeffs;
        for (int i = 0; i <= deg; ++i) coeffs.emplace_back(static_cast<long long>(rng() % 2001) - 1000);
        int_poly p(coeffs);
        pts sample;
        for (int x = 0; x <= deg; ++x) sample.emplace_back(big_int(x), p.eval(big_int(x)));
        CHECK(interpolate_from_values(sample, deg) == p);
    }
}

TEST_CASE("rational function normalization") {
    // n^4 / n^2 -> n^2
    rational_function f(int_poly::monomial(4), int_poly::monomial(2));
    auto w = f.as_polynomial();
    REQUIRE(w.has_value());
    CHECK(w->to_string() == "n^2");
    // (n^2 - 1)/(n - 1) -> n + 1
    rational_function g(int_poly(std::vector<big_int>{big_int(-1), big_int(0), big_int(1)}),
                        int_poly(std::vector<big_int>{big_int(-1), big_int(1)}));
    REQUIRE(g.as_polynomial().has_value());
    CHECK(g.as_polynomial()->to_string() == "n + 1");
    // genuine rational function stays one
    rational_function h(int_poly::one(), int_poly(std::vector<big_int>{big_int(-1), big_int(1)}));
    CHECK_FALSE(h.as_polynomial().has_value());
    CHECK_THROWS_AS(rational_function(int_poly::one(), int_poly::zero()), std::domain_error);
}

static big_int det_cofactor(const int_matrix& m) {
    size_t n = m.rows();
    if (n == 0) return big_int(1);
    if (n == 1) return m(0, 0);
    big_int acc(0);
    for (size_t j = 0; j < n; ++j) {
        int_matrix minor(n - 1, n - 1);
        for (size_t i = 1; i < n; ++i) {
            size_t cc = 0;
            for (size_t c = 0; c < n; ++c) {
                if (c == j) continue;
                minor(i - 1, cc++) = m(i, c);
            }
        }
        big_int term = m(0, j) * det_cofactor(minor);
        acc = j % 2 ? acc - term : acc + term;
    }
    return acc;
}

TEST_CASE("det_exact agrees with cofactor expansion on 10^4 small matrices") {
    CHECK(det_exact(int_matrix(0, 0)) == big_int(1));
    int_matrix id(5, 5);
    for (int i = 0; i < 5; ++i) id(i, i) = big_int(1);
    CHECK(det_exact(id) == big_int(1));
    int_matrix m(2, 2);
    m(0, 0) = big_int(9), m(0, 1) = big_int(3), m(1, 0) = big_int(3), m(1, 1) = big_int(3);
    CHECK(det_exact(m) == big_int(18));

    std::mt19937_64 rng(31);
    for (int t = 0; t < 10000; ++t) {
        size_t n = 1 + rng() % 4;
        int_matrix a(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = big_int(static_cast<long long>(rng() % 19) - 9);
        CHECK(det_exact(a) == det_cofactor(a));
    }
}

TEST_CASE("invert_rational is an exact inverse and flags singularity") {
    int_matrix m(2, 2);
    m(0, 0) = big_int(9), m(0, 1) = big_int(3), m(1, 0) = big_int(3), m(1, 1) = big_int(3);
    auto inv = invert_rational(to_rational_matrix(m));
    CHECK(inv(0, 0) == rational(big_int(1), big_int(6)));
    CHECK(inv(0, 1) == rational(big_int(-1), big_int(6)));
    CHECK(inv(1, 1) == rational(big_int(1), big_int(2)));
    CHECK(inv * to_rational_matrix(m) == rat_matrix::identity(2));

    int_matrix ones(2, 2, big_int(1));
    try {
        invert_rational(to_rational_matrix(ones));
        FAIL("expected singular_matrix_error");
    } catch (const singular_matrix_error& e) {
        CHECK(e.stage() == 1);
    }

    std::mt19937_64 rng(37);
    for (int t = 0; t < 500; ++t) {
        size_t n = 1 + rng() % 4;
        int_matrix a(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) = big_int(static_cast<long long>(rng() % 19) - 9);
        auto ra = to_rational_matrix(a);
        try {
            auto ia = invert_rational(ra);
            CHECK(ia * ra == rat_matrix::identity(n));
        } catch (const singular_matrix_error&) {
            CHECK(det_exact(a) == big_int(0));
        }
    }
}

TEST_CASE("modular arithmetic, interpolation, CRT") {
    u64 p = nth_crt_prime(0);
    CHECK(is_prime_u64(p));
    CHECK_FALSE(is_prime_u64(p - 1));
    montgomery mg(p);
    std::mt19937_64 rng(41);
    for (int t = 0; t < 5000; ++t) {
        u64 a = rng() % p, b = rng() % p;
        CHECK(mg.from_mont(mg.mul(mg.to_mont(a), mg.to_mont(b))) ==
              static_cast<u64>(static_cast<u128>(a) * b % p));
    }
    // interpolation of a known polynomial mod p
    std::vector<u64> ys;
    for (u64 x = 1; x <= 5; ++x) ys.push_back((x * x * x + 7 * x + 2) % p);
    auto cf = interpolate_mod(ys, mg);
    CHECK(cf == std::vector<u64>{2, 7, 0, 1, 0});

    // CRT reconstruction of signed values
    std::vector<u64> primes = {nth_crt_prime(0), nth_crt_prime(1), nth_crt_prime(2)};
    big_int target = big_int::parse("-98765432109876543210987654321");
    crt_accumulator acc;
    for (u64 q : primes) {
        big_int rem = target % big_int(static_cast<unsigned long long>(q));
        if (rem.is_negative()) rem += big_int(static_cast<unsigned long long>(q));
        acc.add(rem.mod_u64(q), q);
    }
    CHECK(acc.symmetric() == target);

    // modular determinants agree with the exact one
    for (int t = 0; t < 200; ++t) {
        size_t n = 1 + rng() % 5;
        int_matrix a(n, n);
        std::vector<u64> flat(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                long long v = static_cast<long long>(rng() % 19) - 9;
                a(i, j) = big_int(v);
                a(j, i) = big_int(v);  // symmetric, to exercise the LDL path
                u64 r = static_cast<u64>((v % static_cast<long long>(p) + static_cast<long long>(p)) %
                                         static_cast<long long>(p));
                flat[i * n + j] = mg.to_mont(r);
                flat[j * n + i] = mg.to_mont(r);
            }
        big_int d = det_exact(a) % big_int(static_cast<unsigned long long>(p));
        if (d.is_negative()) d += big_int(static_cast<unsigned long long>(p));
        CHECK(mod_det_symmetric(flat, n, mg) == d.mod_u64(p));
        CHECK(mod_det_general(flat, n, mg) == d.mod_u64(p));
    }
}
