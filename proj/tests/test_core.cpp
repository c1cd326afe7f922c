#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "segre/core.hpp"

using namespace segre;
using namespace segre::core;

TEST_CASE("rational arithmetic is exact and canonical") {
    CHECK(Rat(6, 4) == Rat(3, 2));
    CHECK(Rat(3, -2) == Rat(-3, 2));
    CHECK(Rat(0, -7) == Rat(0));
    CHECK((Rat(1, 2) + Rat(1, 3)) == Rat(5, 6));
    CHECK((Rat(1, 2) - Rat(2)) == Rat(-3, 2));
    CHECK((Rat(2, 3) * Rat(9, 4)) == Rat(3, 2));
    CHECK(Rat(1, 5).ceil() == 1);
    CHECK(Rat(-1, 5).ceil() == 0);
    CHECK(Rat(4, 2).ceil() == 2);
    CHECK(Rat(7, 2) > Rat(10, 3));
    CHECK(Rat(-1, 2).str() == "-1/2");
    CHECK(Rat(4, 2).str() == "2");
    CHECK_THROWS_AS(Rat(1, 0), domain_error);
}

TEST_CASE("checked arithmetic raises on overflow") {
    CHECK(checked_mul(3'000'000'000LL, 3) == 9'000'000'000LL);
    CHECK_THROWS_AS(checked_mul(INT64_MAX, 2), segre::overflow_error);
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), segre::overflow_error);
    CHECK(floor_div(-1, 3) == -1);
    CHECK(floor_div(-3, 3) == -1);
    CHECK(mod_floor(-1, 3) == 2);
    CHECK(ceil_div(1, 5) == 1);
    CHECK(ceil_div(-1, 5) == 0);
}

TEST_CASE("segre_pair") {
    CHECK(segre_pair(2, 1, 1, 0) == 1);
    CHECK(segre_pair(3, 1, 2, 0) == 2);
    CHECK(segre_pair(4, 0, 2, 0) == 0);
    CHECK_THROWS_AS(segre_pair(3, 1, 0, 0), domain_error);
    CHECK_THROWS_AS(segre_pair(3, 1, 3, 0), domain_error);
    CHECK_THROWS_AS(segre_pair(1, 1, 1, 0), domain_error);
}

TEST_CASE("segre_pair satisfies the slope identity") {
    for (std::int64_t r = 2; r <= 6; ++r)
        for (std::int64_t d = -5; d <= 5; ++d)
            for (std::int64_t k = 1; k <= r - 1; ++k)
                for (std::int64_t deg_f = -4; deg_f <= 4; ++deg_f) {
                    const Rat mu_f(deg_f, k);
                    const Rat mu_q(d - deg_f, r - k);
                    const Rat rhs = Rat(k * (r - k)) * (mu_q - mu_f);
                    CHECK(Rat(segre_pair(r, d, k, deg_f)) == rhs);
                }
}

TEST_CASE("segre_pair steps by r over consecutive subbundle degrees") {
    for (std::int64_t r = 2; r <= 6; ++r)
        for (std::int64_t d = -3; d <= 3; ++d)
            for (std::int64_t k = 1; k <= r - 1; ++k)
                for (std::int64_t deg_f = -3; deg_f <= 3; ++deg_f)
                    CHECK(segre_pair(r, d, k, deg_f) - segre_pair(r, d, k, deg_f + 1) == r);
}

TEST_CASE("hirschowitz_bound") {
    CHECK(hirschowitz_bound(2, 2, 1) == 2);  // rank-2 cap equals g
    CHECK(hirschowitz_bound(2, 3, 1) == 4);
    CHECK(hirschowitz_bound(3, 4, 2) == 11);
    CHECK_THROWS_AS(hirschowitz_bound(1, 2, 1), domain_error);
}

TEST_CASE("mukai_sakai_bound") {
    CHECK(mukai_sakai_bound(2, 2, 1) == 2);
    CHECK(mukai_sakai_bound(3, 3, 1) == 6);
    CHECK(mukai_sakai_bound(2, 4, 2) == 8);
    // never sharper than Hirschowitz on the window
    for (std::int64_t g = 2; g <= 8; ++g)
        for (std::int64_t r = 2; r <= 8; ++r)
            for (std::int64_t k = 1; k <= r - 1; ++k)
                CHECK(mukai_sakai_bound(g, r, k) >= hirschowitz_bound(g, r, k));
}

TEST_CASE("epsilon_k and s_max") {
    CHECK(epsilon_k(2, 3, 1, 2) == 0);
    CHECK(epsilon_k(2, 3, 1, 1) == 2);
    CHECK(epsilon_k(2, 2, 0, 1) == 1);
    CHECK(s_max(2, 2, 0, 1) == 2);  // attains the rank-2 cap g
    CHECK(s_max(2, 3, 1, 2) == 2);
    CHECK(s_max(2, 3, 1, 1) == 4);
    CHECK(s_max(5, 2, 1, 1) == 5);
}

TEST_CASE("valid_s") {
    CHECK(valid_s(2, 2, 1, 1) == std::vector<std::int64_t>{1});
    CHECK(valid_s(4, 2, 0, 1) == std::vector<std::int64_t>{2, 4});
    CHECK(valid_s(2, 3, 1, 2) == std::vector<std::int64_t>{2});
}

TEST_CASE("dual_params is an involution matching s_max") {
    const auto dp = dual_params(3, 1, 2);
    CHECK(dp.r == 3);
    CHECK(dp.d == -1);
    CHECK(dp.k == 1);
    const auto back = dual_params(dp.r, dp.d, dp.k);
    CHECK(back.r == 3);
    CHECK(back.d == 1);
    CHECK(back.k == 2);
    CHECK(s_max(2, 3, 1, 2) == 2);
    CHECK(s_max(2, 3, -1, 1) == 2);
}

TEST_CASE("stratum_dim and generic_dim") {
    CHECK(stratum_dim(5, 2, 1, 1, 1) == 14);  // 3g+s-2
    CHECK(stratum_dim(5, 2, 1, 1, 5) == 17);  // 4g-3
    CHECK(stratum_dim(3, 3, 1, 1, 1) == 16);
    CHECK(generic_dim(3, 3) - stratum_dim(3, 3, 1, 1, 1) == 3);  // k(r-k)(g-1)-s
    CHECK(generic_dim(2, 2) == 5);
    CHECK(generic_dim(5, 2) == 17);
    CHECK(generic_dim(2, 3) == 10);
    CHECK_THROWS_AS(stratum_dim(5, 2, 1, 1, 2), domain_error);   // wrong congruence
    CHECK_THROWS_AS(stratum_dim(5, 2, 1, 1, 7), domain_error);   // above s_max
    CHECK_THROWS_AS(stratum_dim(5, 2, 1, 1, -1), domain_error);  // non-positive
}

TEST_CASE("maximal_locus_dim") {
    CHECK(maximal_locus_dim(5, 2, 1, 5) == 1);
    CHECK(maximal_locus_dim(5, 2, 1, 3) == 0);
    CHECK(maximal_locus_dim(2, 3, 2, 2) == 0);
    // equals eps at s = s_max; capped by k(r-k) on the whole window
    for (std::int64_t g = 2; g <= 6; ++g)
        for (std::int64_t r = 2; r <= 6; ++r)
            for (std::int64_t d = -r; d <= r; ++d)
                for (std::int64_t k = 1; k <= r - 1; ++k) {
                    CHECK(maximal_locus_dim(g, r, k, s_max(g, r, d, k)) == epsilon_k(g, r, d, k));
                    for (std::int64_t s : valid_s(g, r, d, k))
                        CHECK(maximal_locus_dim(g, r, k, s) <= k * (r - k));
                }
}

TEST_CASE("nested_bounds") {
    const auto a = nested_bounds(3, 2, 2, 1);
    REQUIRE(a.sub_bound.has_value());
    CHECK(*a.sub_bound == Rat(0));
    CHECK(*a.sub_bound_int == 0);
    CHECK_FALSE(a.quot_bound.has_value());  // r-k-1 = 0: quotient side absent

    const auto b = nested_bounds(5, 3, 1, 2);
    REQUIRE(b.sub_bound.has_value());
    CHECK(*b.sub_bound == Rat(1, 5));
    CHECK(*b.sub_bound_int == 1);

    const auto c = nested_bounds(4, 2, 2, 1);
    REQUIRE(c.quot_bound.has_value());
    CHECK(*c.quot_bound == Rat(0));
    CHECK(*c.quot_bound_int == 0);

    CHECK_THROWS_AS(nested_bounds(3, 2, 2, 5), domain_error);  // nu outside both ranges
    CHECK_THROWS_AS(nested_bounds(3, 2, 0, 1), domain_error);  // unstable ambient bundle
}

TEST_CASE("strata_table frozen instances") {
    const auto t1 = strata_table(2, 2, 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0].k == 1);
    CHECK(t1[0].s == 1);
    CHECK(t1[0].dim == 5);
    CHECK(t1[0].codim == 0);
    CHECK(t1[0].locus_dim == 0);
    CHECK(t1[0].is_generic);

    const auto t2 = strata_table(4, 2, 0);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0].s == 2);
    CHECK(t2[0].dim == 12);
    CHECK_FALSE(t2[0].is_generic);
    CHECK(t2[1].s == 4);
    CHECK(t2[1].dim == 13);
    CHECK(t2[1].is_generic);

    const auto t3 = strata_table(2, 3, 1);
    REQUIRE(t3.size() == 3);
    CHECK(t3[0].k == 1);
    CHECK(t3[0].s == 1);
    CHECK(t3[0].dim == 9);
    CHECK(t3[0].d1 == 0);
    CHECK(t3[1].k == 1);
    CHECK(t3[1].s == 4);
    CHECK(t3[1].d1 == -1);
    CHECK(t3[1].locus_dim == 2);
    CHECK(t3[2].k == 2);
    CHECK(t3[2].s == 2);
    CHECK(t3[2].dim == 10);
    CHECK(t3[2].locus_dim == 0);
}

TEST_CASE("strata_table rows satisfy the descriptor invariants") {
    for (std::int64_t g = 2; g <= 5; ++g)
        for (std::int64_t r = 2; r <= 5; ++r)
            for (std::int64_t d = -r; d <= r; ++d) {
                std::int64_t prev_k = 0, prev_s = 0;
                for (const auto& row : strata_table(g, r, d)) {
                    CHECK(row.eps >= 0);
                    CHECK(row.eps <= r - 1);
                    CHECK(mod_floor(row.s - row.k * row.d, r) == 0);
                    CHECK(r * row.d1 == row.k * row.d - row.s);
                    CHECK(row.locus_dim >= 0);
                    CHECK(row.locus_dim <= row.k * (r - row.k));
                    CHECK(row.codim == generic_dim(g, r) - row.dim);
                    // fixed (k, s) lexicographic order
                    CHECK((row.k > prev_k || (row.k == prev_k && row.s > prev_s)));
                    prev_k = row.k;
                    prev_s = row.s;
                }
            }
}

TEST_CASE("s_max window, congruence, duality and twist invariance") {
    for (std::int64_t g = 2; g <= 8; ++g)
        for (std::int64_t r = 2; r <= 6; ++r)
            for (std::int64_t d = -r; d <= r; ++d)
                for (std::int64_t k = 1; k <= r - 1; ++k) {
                    const std::int64_t sm = s_max(g, r, d, k);
                    CHECK(sm >= k * (r - k) * (g - 1));
                    CHECK(sm <= hirschowitz_bound(g, r, k));
                    CHECK(mod_floor(sm - k * d, r) == 0);
                    CHECK(sm == s_max(g, r, -d, r - k));
                    for (std::int64_t t = -3; t <= 3; ++t)
                        CHECK(sm == s_max(g, r, d + r * t, k));
                }
}

TEST_CASE("rank-2 stratum dimensions specialize to the classical formulas") {
    for (std::int64_t g = 2; g <= 12; ++g)
        for (std::int64_t d = 0; d <= 1; ++d)
            for (std::int64_t s : valid_s(g, 2, d, 1)) {
                const std::int64_t dim = stratum_dim(g, 2, d, 1, s);
                if (s <= g - 2)
                    CHECK(dim == 3 * g + s - 2);
                else
                    CHECK(dim == 4 * g - 3);
            }
}

TEST_CASE("input guard rejects out-of-window values distinctly") {
    CHECK_THROWS_AS(hirschowitz_bound(2, 65, 1), guard_error);
    CHECK_THROWS_AS(hirschowitz_bound(1'000'001, 2, 1), guard_error);
    CHECK_THROWS_AS(s_max(2, 2, 1'000'000'001, 1), guard_error);
    CHECK_THROWS_AS(s_max(2, 2, -1'000'000'001, 1), guard_error);
    // in-window extremes stay exact
    CHECK(s_max(1'000'000, 64, 1'000'000'000, 32) > 0);
    CHECK(BundleClass{2, 3, 1}.slope() == Rat(1, 3));
    CHECK(SubbundlePair{{2, 3, 1}, 2, 0}.pair_value() == 2);
}
