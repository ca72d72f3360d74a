#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gramdet/chebyshev.hpp"
#include "gramdet/epi.hpp"
#include "gramdet/partition.hpp"

using namespace gramdet;

static long long bell(int k) {
    // Bell triangle
    std::vector<std::vector<long long>> t = {{1}};
    for (int i = 1; i <= k; ++i) {
        std::vector<long long> row = {t.back().back()};
        for (long long v : t.back()) row.push_back(row.back() + v);
        t.push_back(row);
    }
    return t[static_cast<size_t>(k)][0];
}

static long long catalan(int k) { return (binomial(2 * k, k) / big_int(k + 1)).to_int64(); }

TEST_CASE("canonical form, text round trip, category spellings") {
    auto p = set_partition::parse("{1,2}{3,4}", 4);
    CHECK(p.to_string() == "{1,2}{3,4}");
    CHECK(p.rgs() == std::vector<uint8_t>{0, 0, 1, 1});
    CHECK(set_partition::parse("{3,4}{1,2}", 4) == p);
    CHECK(set_partition().to_string() == "{}");
    CHECK(set_partition::parse("{}", 0) == set_partition());
    CHECK_THROWS_AS(set_partition::parse("{1}{1,2}", 2), std::invalid_argument);
    CHECK_THROWS_AS(set_partition(std::vector<uint8_t>{1}), std::invalid_argument);

    CHECK(parse_category("o+") == category::o_plus);
    CHECK(parse_category("o_plus") == category::o_plus);
    CHECK(parse_category("h*") == category::h_star);
    CHECK(parse_category("h_star") == category::h_star);
    CHECK_FALSE(parse_category("x").has_value());
    CHECK(category_name(category::b_plus) == "b_plus");
}

TEST_CASE("enumeration counts match the classical sequences") {
    for (int k = 0; k <= 10; ++k) CHECK(static_cast<long long>(partitions_of(category::s, k).size()) == bell(k));
    for (int k = 0; k <= 10; ++k)
        CHECK(static_cast<long long>(partitions_of(category::s_plus, k).size()) == catalan(k));
    for (int l = 1; l <= 5; ++l) {
        CHECK(big_int(static_cast<long long>(partitions_of(category::o, 2 * l).size())) ==
              factorial(2 * l) / (big_int::pow(big_int(2), l) * factorial(l)));
        CHECK(static_cast<long long>(partitions_of(category::o, 2 * l - 1).size()) == 0);
        CHECK(big_int(static_cast<long long>(partitions_of(category::o_star, 2 * l).size())) == factorial(l));
        CHECK(static_cast<long long>(partitions_of(category::o_plus, 2 * l).size()) == catalan(l));
        CHECK(big_int(static_cast<long long>(partitions_of(category::h_plus, 2 * l).size())) ==
              binomial(3 * l, l) / big_int(2 * l + 1));
    }
    // b: singletons plus pairings = involution numbers I(k) = I(k-1) + (k-1) I(k-2)
    std::vector<long long> inv = {1, 1};
    for (int k = 2; k <= 10; ++k) inv.push_back(inv[k - 1] + (k - 1) * inv[k - 2]);
    for (int k = 0; k <= 10; ++k)
        CHECK(static_cast<long long>(partitions_of(category::b, k).size()) == inv[static_cast<size_t>(k)]);
    // noncrossing categories are subsets of their crossing counterparts
    std::pair<category, category> pairs[] = {{category::s_plus, category::s},
                                             {category::o_plus, category::o},
                                             {category::b_plus, category::b},
                                             {category::h_plus, category::h}};
    for (auto [ncc, cc] : pairs)
        for (int k = 0; k <= 8; ++k)
            for (const auto& p : partitions_of(ncc, k)) CHECK(is_member(cc, p));
}

TEST_CASE("spec enumeration examples") {
    CHECK(partitions_of(category::s, 3).size() == 5);
    auto ostar4 = partitions_of(category::o_star, 4);
    REQUIRE(ostar4.size() == 2);
    CHECK(ostar4[0].to_string() == "{1,2}{3,4}");
    CHECK(ostar4[1].to_string() == "{1,4}{2,3}");
    auto hp4 = partitions_of(category::h_plus, 4);
    REQUIRE(hp4.size() == 3);
    CHECK(hp4[0].to_string() == "{1,2,3,4}");
    CHECK(hp4[1].to_string() == "{1,2}{3,4}");
    CHECK(hp4[2].to_string() == "{1,4}{2,3}");
    CHECK(partitions_of(category::o_plus, 5).empty());
    CHECK(partitions_of(category::h, 1).empty());
}

TEST_CASE("membership predicates") {
    CHECK_FALSE(is_member(category::h_star, set_partition::parse("{1,3}{2,4}", 4)));
    CHECK(is_member(category::h_star, set_partition::parse("{1,4}{2,3}", 4)));
    CHECK(is_member(category::s, set_partition::parse("{1,3}{2,4}", 4)));
    CHECK_FALSE(is_member(category::o_plus, set_partition::parse("{1,3}{2,4}", 4)));
    CHECK(is_member(category::o, set_partition::parse("{1,3}{2,4}", 4)));
    CHECK_FALSE(is_member(category::o_star, set_partition::parse("{1,3}{2,4}", 4)));
    CHECK(is_member(category::h_plus, set_partition::one_block(4)));
    CHECK_FALSE(is_member(category::b, set_partition::one_block(3)));
}

TEST_CASE("join, meet, refinement: spec examples and lattice laws") {
    CHECK(join(set_partition::parse("{1,3}{2}", 3), set_partition::parse("{1}{2,3}", 3)) ==
          set_partition::one_block(3));
    CHECK(join(set_partition::parse("{1,2}{3,4}", 4), set_partition::parse("{1,4}{2,3}", 4)) ==
          set_partition::one_block(4));
    CHECK(meet(set_partition::one_block(3), set_partition::parse("{1,2}{3}", 3)) ==
          set_partition::parse("{1,2}{3}", 3));
    CHECK(meet(set_partition::parse("{1,2}{3,4}", 4), set_partition::parse("{1,4}{2,3}", 4)) ==
          set_partition::singletons(4));
    CHECK(refines(set_partition::singletons(5), set_partition::parse("{1,2,3}{4,5}", 5)));
    CHECK_FALSE(refines(set_partition::one_block(3), set_partition::parse("{1,2}{3}", 3)));
    CHECK_THROWS_AS(join(set_partition::singletons(2), set_partition::singletons(3)), std::invalid_argument);

    const auto& all5 = partitions_of(category::s, 5);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 3000; ++t) {
        const auto& p = all5[rng() % all5.size()];
        const auto& q = all5[rng() % all5.size()];
        const auto& r = all5[rng() % all5.size()];
        CHECK(join(p, q) == join(q, p));
        CHECK(meet(p, q) == meet(q, p));
        CHECK(join(p, p) == p);
        CHECK(meet(p, p) == p);
        CHECK(join(join(p, q), r) == join(p, join(q, r)));
        CHECK(meet(meet(p, q), r) == meet(p, meet(q, r)));
        CHECK(refines(meet(p, q), p));
        CHECK(refines(p, join(p, q)));
        // |join| <= min(|p|, |q|), equality iff comparable
        int jb = join(p, q).num_blocks();
        CHECK(jb <= std::min(p.num_blocks(), q.num_blocks()));
        CHECK((jb == p.num_blocks()) == refines(q, p));
        CHECK(refines(p, q) == (join(p, q) == q));
    }
}

TEST_CASE("mobius: recursion, closed-form oracle, inversion identity") {
    CHECK(mobius(set_partition::singletons(2), set_partition::one_block(2)) == -1);
    CHECK(mobius(set_partition::singletons(3), set_partition::one_block(3)) == 2);
    CHECK(mobius(set_partition::parse("{1,2}{3}", 3), set_partition::parse("{1,2}{3}", 3)) == 1);
    CHECK_THROWS_AS(mobius(set_partition::one_block(3), set_partition::singletons(3)), std::domain_error);

    // closed form for intervals: product over q-blocks of (-1)^{m-1}(m-1)!
    auto mobius_product_oracle = [](const set_partition& p, const set_partition& q) {
        long long acc = 1;
        std::vector<std::vector<int>> groups(static_cast<size_t>(q.num_blocks()));
        std::vector<int> seen(static_cast<size_t>(p.num_blocks()), 0);
        for (int i = 0; i < p.points(); ++i)
            if (!seen[p.block_of(i)]) {
                seen[p.block_of(i)] = 1;
                groups[static_cast<size_t>(q.block_of(i))].push_back(p.block_of(i));
            }
        for (const auto& g : groups) {
            long long f = 1;
            for (size_t i = 2; i < g.size(); ++i) f *= static_cast<long long>(i);
            acc *= (g.size() % 2 == 0 ? -f : f);
        }
        return acc;
    };
    for (int m = 2; m <= 6; ++m)
        CHECK(mobius(set_partition::singletons(m), set_partition::one_block(m)) ==
              mobius_product_oracle(set_partition::singletons(m), set_partition::one_block(m)));
    const auto& all5 = partitions_of(category::s, 5);
    for (const auto& p : all5)
        for (const auto& q : all5) {
            if (!refines(p, q)) continue;
            CHECK(mobius(p, q) == mobius_product_oracle(p, q));
        }
    // Mobius inversion: sum over [p, q] of mu(p, tau) = [p == q]
    const auto& all4 = partitions_of(category::s, 4);
    for (const auto& p : all4)
        for (const auto& q : all4) {
            if (!refines(p, q)) continue;
            long long total = 0;
            for (const auto& tau : all4)
                if (refines(p, tau) && refines(tau, q)) total += mobius(p, tau);
            CHECK(total == (p == q ? 1 : 0));
        }
}

TEST_CASE("stirling counts and invariant bundles") {
    CHECK(stirling(category::s, 3, 2) == big_int(3));
    CHECK(stirling(category::o, 4, 2) == big_int(3));
    CHECK(stirling(category::h, 4, 2) == big_int(3));
    CHECK_THROWS_AS(stirling(category::s, 3, 4), std::invalid_argument);

    auto sp3 = compute_invariant_bundle(category::s_plus, 3);
    CHECK(sp3.b_k == big_int(5));
    CHECK(sp3.s_k == big_int(10));
    CHECK(sp3.a_k == big_int(5));
    CHECK(sp3.m_k == rational(2));
    auto op4 = compute_invariant_bundle(category::o_plus, 4);
    CHECK(op4.b_k == big_int(2));
    CHECK(op4.s_k == big_int(4));
    CHECK(op4.m_k == rational(2));
    CHECK(op4.a_k == big_int(0));
    auto hp4 = compute_invariant_bundle(category::h_plus, 4);
    CHECK(hp4.b_k == big_int(3));
    CHECK(hp4.s_k == big_int(5));
    CHECK(hp4.a_k == big_int(-2));
    // bundle identities: a = 2s - kb, b = sum S_kr, s = sum r S_kr
    for (auto c : all_categories())
        for (int k = 0; k <= 6; ++k) {
            auto ib = compute_invariant_bundle(c, k);
            CHECK(ib.a_k == big_int(2) * ib.s_k - big_int(k) * ib.b_k);
            big_int bsum(0), ssum(0);
            for (size_t r = 0; r < ib.stirling.size(); ++r) {
                bsum += ib.stirling[r];
                ssum += big_int(static_cast<long long>(r)) * ib.stirling[r];
            }
            CHECK(bsum == ib.b_k);
            CHECK(ssum == ib.s_k);
        }
    // k = 0 conventions
    auto z = compute_invariant_bundle(category::s, 0);
    CHECK(z.b_k == big_int(1));
    CHECK(z.s_k == big_int(0));
    CHECK(z.a_k == big_int(0));
}

TEST_CASE("epi enumeration: spec examples and the binomial counts") {
    auto eo4 = epi_counts(category::o_plus, 4);
    CHECK(eo4[0] == 2);
    CHECK(eo4[2] == 3);
    CHECK(eo4[4] == 1);
    CHECK(eo4.count(1) == 0);
    auto eo2 = epi_counts(category::o_plus, 2);
    CHECK(eo2[0] == 1);
    CHECK(eo2[2] == 1);
    auto es2 = epi_counts(category::s_plus, 2);
    CHECK(es2[0] == 2);
    CHECK(es2[1] == 3);
    CHECK(es2[2] == 1);
    CHECK_THROWS_AS(enumerate_epi(category::s, 3), std::invalid_argument);

    // o_plus epi counts match f^1_{k/2,r} for even k <= 12
    for (int k = 2; k <= 12; k += 2) {
        auto counts = epi_counts(category::o_plus, k);
        for (int r = 0; 2 * r <= k; ++r) {
            long long c = counts.count(2 * r) ? counts[2 * r] : 0;
            CHECK(big_int(c) == exponent_f(1, k / 2, r));
        }
    }
    // s_plus epi are the fattened o_plus epi: #P^r(k) = f^1_{k,r}
    for (int k = 1; k <= 6; ++k) {
        auto counts = epi_counts(category::s_plus, k);
        for (int r = 0; r <= k; ++r) {
            long long c = counts.count(r) ? counts[r] : 0;
            CHECK(big_int(c) == exponent_f(1, k, r));
        }
    }
    // epi structure invariants
    for (auto& [r, es] : enumerate_epi(category::b_plus, 5))
        for (const auto& e : es) {
            CHECK(e.r == r);
            auto blocks = e.partition.blocks();
            for (const auto& bl : blocks) {
                int uppers = 0, lowers = 0;
                for (int pt : bl) (pt <= e.r ? uppers : lowers)++;
                CHECK(uppers <= 1);
                if (uppers == 1) CHECK(lowers >= 1);
            }
        }
}
