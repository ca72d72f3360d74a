#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gramdet/chebyshev.hpp"
#include "gramdet/orthopoly.hpp"

using namespace gramdet;

static moment_sequence make_moments(std::vector<long long> v, std::string tag) {
    moment_sequence ms;
    for (long long x : v) ms.m.emplace_back(big_int(x));
    ms.provenance = std::move(tag);
    return ms;
}

TEST_CASE("jacobi parameters from classical moment sequences") {
    auto gauss = make_moments({1, 0, 1, 0, 3, 0, 15, 0, 105}, "gaussian");
    auto jh = jacobi_from_moments(gauss, 4);
    for (const auto& a : jh.alpha) CHECK(a.is_zero());
    for (size_t k = 1; k <= 4; ++k) CHECK(jh.beta[k] == rational(static_cast<long long>(k)));
    CHECK(orthogonality_check(jh, gauss));

    auto bell = make_moments({1, 1, 2, 5, 15, 52, 203, 877, 4140}, "bell");
    auto jc = jacobi_from_moments(bell, 4);
    for (size_t k = 0; k < 4; ++k) CHECK(jc.alpha[k] == rational(static_cast<long long>(k) + 1));
    for (size_t k = 1; k <= 4; ++k) CHECK(jc.beta[k] == rational(static_cast<long long>(k)));

    auto semi = make_moments({1, 0, 1, 0, 2, 0, 5}, "semicircle");
    auto jt = jacobi_from_moments(semi, 3);
    for (const auto& a : jt.alpha) CHECK(a.is_zero());
    for (size_t k = 1; k <= 3; ++k) CHECK(jt.beta[k] == rational(1));

    // Hermite polynomials are not orthogonal for the semicircle functional
    CHECK_FALSE(orthogonality_check(jh, semi));

    CHECK_THROWS_AS(jacobi_from_moments(semi, 4), std::invalid_argument);  // not enough moments
    // a point mass is degenerate at gamma_1
    auto point = make_moments({1, 1, 1, 1, 1}, "point mass");
    try {
        jacobi_from_moments(point, 2);
        FAIL("expected degenerate_moments_error");
    } catch (const degenerate_moments_error& e) {
        CHECK(e.index() == 1);
    }
}

TEST_CASE("the seven recurrence families are recovered from enumerated moments") {
    struct family_row {
        op_family f;
        std::vector<long long> alphas;  // alpha_0..alpha_3
        std::vector<long long> betas;   // beta_1..beta_4
    };
    family_row rows[] = {
        {op_family::O, {0, 0, 0, 0}, {1, 2, 3, 4}},
        {op_family::B, {1, 1, 1, 1}, {1, 2, 3, 4}},
        {op_family::Ostar, {0, 0, 0, 0}, {1, 1, 2, 2}},
        {op_family::S, {1, 2, 3, 4}, {1, 2, 3, 4}},
        {op_family::Oplus, {0, 0, 0, 0}, {1, 1, 1, 1}},
        {op_family::Bplus, {1, 1, 1, 1}, {1, 1, 1, 1}},
        {op_family::Splus, {1, 2, 2, 2}, {1, 1, 1, 1}},
    };
    for (const auto& row : rows) {
        auto ms = moments(op_family_category(row.f), 8);
        auto jd = jacobi_from_moments(ms, 4);
        for (size_t k = 0; k < 4; ++k) CHECK(jd.alpha[k] == rational(row.alphas[k]));
        for (size_t k = 1; k <= 4; ++k) CHECK(jd.beta[k] == rational(row.betas[k - 1]));
        auto rq = recurrence_polys(row.f, 4);
        for (size_t k = 0; k <= 4; ++k) CHECK(rq[k] == jd.q[k]);
        CHECK(orthogonality_check(jd, ms));
        for (const auto& g : jd.gamma) CHECK(g > rational(0));
    }
}

TEST_CASE("recurrence family spot values") {
    auto oplus = recurrence_polys(op_family::Oplus, 3);
    CHECK(oplus[3].to_string() == "n^3 - 2*n");
    auto splus = recurrence_polys(op_family::Splus, 2);
    CHECK(splus[2].to_string() == "n^2 - 3*n + 1");
    auto ostar = recurrence_polys(op_family::Ostar, 2);
    CHECK(ostar[2].to_string() == "n^2 - 1");
}

TEST_CASE("extended orthogonal polynomial correspondences") {
    for (int k = 0; k <= 8; ++k) {
        CHECK(*to_integer_poly(recurrence_polys(op_family::Splus, 8)[static_cast<size_t>(k)]) ==
              cheb(cheb_family::R, 2 * k));
        CHECK(*to_integer_poly(recurrence_polys(op_family::Oplus, 8)[static_cast<size_t>(k)]) ==
              cheb(cheb_family::P, k));
        CHECK(*to_integer_poly(recurrence_polys(op_family::Bplus, 8)[static_cast<size_t>(k)]) ==
              cheb(cheb_family::Q, k));
    }
}

TEST_CASE("free Bessel Jacobi data reproduces the reference table") {
    auto rows = hnplus_jacobi(8);
    const char* gam[] = {"1", "2", "3", "11/2", "26/3", "170/11", "323/13", "437/10"};
    const char* bet[] = {"1", "2", "3/2", "11/6", "52/33", "255/143", "209/130", "299/170"};
    REQUIRE(rows.size() == 8);
    for (size_t k = 1; k <= 8; ++k) {
        CHECK(rows[k - 1].gamma.to_string() == gam[k - 1]);
        CHECK(rows[k - 1].beta.to_string() == bet[k - 1]);
        CHECK(rows[k - 1].match);
    }
    // conjectured closed form continues to match through depth 12
    for (const auto& r : hnplus_jacobi(12)) {
        CHECK(r.match);
        CHECK(r.gamma > rational(0));
    }
    // moment counts: enumeration equals the Fuss-Catalan values for k <= 8
    for (int l = 1; l <= 8; ++l)
        CHECK(big_int(static_cast<long long>(partitions_of(category::h_plus, 2 * l).size())) == fuss_catalan(l));
    const long long ck[] = {1, 3, 12, 55, 273, 1428, 7752, 43263};
    for (int l = 1; l <= 8; ++l) CHECK(fuss_catalan(l) == big_int(ck[l - 1]));
}

TEST_CASE("beta conjecture formula evaluates as printed") {
    CHECK(h_plus_beta_conjecture(3) == rational(big_int(3), big_int(2)));  // 3*7*10 / (4*5*7)
    CHECK(h_plus_beta_conjecture(1) == rational(1));
    CHECK(h_plus_beta_conjecture(2) == rational(2));
}

TEST_CASE("character moments are partition counts") {
    auto mo = moments(category::o, 4);
    CHECK(mo.m == std::vector<rational>{rational(1), rational(0), rational(1), rational(0), rational(3)});
    auto msp = moments(category::s_plus, 3);
    CHECK(msp.m == std::vector<rational>{rational(1), rational(1), rational(2), rational(5)});
    auto mhp = moments(category::h_plus, 4);
    CHECK(mhp.m == std::vector<rational>{rational(1), rational(0), rational(1), rational(0), rational(3)});
}
