#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mcg/orbifold.hpp"

using namespace mcg;

TEST_CASE("euler characteristic") {
    CHECK(euler_char(0, 0) == 2);
    CHECK(euler_char(1, 0) == 0);
    CHECK(euler_char(2, 1) == -3);
    CHECK_THROWS_AS(euler_char(-1, 0), std::invalid_argument);
}

TEST_CASE("prong formula instances") {
    std::vector<SingularityDatum> four_one_prong(4, SingularityDatum{"p", 1, false});
    CHECK(check_prong_formula(2, four_one_prong));
    std::vector<SingularityDatum> mixed(5, SingularityDatum{"p", 1, false});
    mixed.push_back(SingularityDatum{"q", 3, false});
    CHECK(check_prong_formula(2, mixed));
    CHECK(check_prong_formula(0, {}));
    CHECK(!check_prong_formula(1, four_one_prong));
    // lifted family: 2 points of index rho, 2*rho points of index 3
    for (long long rho : {4LL, 8LL, 12LL}) {
        std::vector<SingularityDatum> s(2, SingularityDatum{"p", static_cast<int>(rho), false});
        s.insert(s.end(), static_cast<std::size_t>(2 * rho), SingularityDatum{"q", 3, false});
        CHECK(check_prong_formula(2 - 2 * rho, s));
    }
}

TEST_CASE("riemann-hurwitz instances and validation") {
    CHECK(check_riemann_hurwitz({12, -2, 2, {{4, 3}, {6, 2}, {6, 2}, {6, 2}}}));
    CHECK(check_riemann_hurwitz({8, -6, 2, {{2, 4}, {4, 2}, {4, 2}, {4, 2}, {4, 2}}}));
    CHECK(check_riemann_hurwitz({2, 0, 0, {}}));  // unbranched torus double cover
    for (long long rho = 2; rho <= 16; ++rho)
        CHECK(check_riemann_hurwitz({4 * (rho + 1),
                                     2 - 2 * rho,
                                     2,
                                     {{4, rho + 1}, {2 * (rho + 1), 2}, {2 * (rho + 1), 2},
                                      {2 * (rho + 1), 2}}}));
    for (long long rho : {4LL, 8LL, 12LL, 16LL})
        CHECK(check_riemann_hurwitz(
            {2 * rho, 2 - 2 * rho, 2, {{2, rho}, {rho, 2}, {rho, 2}, {rho, 2}, {rho, 2}}}));
    CHECK_THROWS_AS(check_riemann_hurwitz({4, 0, 0, {{3, 2}}}), std::invalid_argument);  // o*r != m
    CHECK_THROWS_AS(check_riemann_hurwitz({4, 0, 0, {{4, 1}}}), std::invalid_argument);  // r < 2
}

TEST_CASE("index lifting and pivots") {
    CHECK(lift_index(1, 4) == 4);
    CHECK(lift_index(1, 2) == 2);
    CHECK(lift_index(3, 1) == 3);
    for (long long rho = 2; rho <= 12; ++rho)
        CHECK(is_pivot({{1, rho + 1}, {1, 2}, {1, 2}, {1, 2}, {2, 1}}, 0));
    for (long long rho = 4; rho <= 12; rho += 4)
        CHECK(is_pivot({{1, rho}, {1, 2}, {1, 2}, {1, 2}, {1, 2}, {3, 1}}, 0));
    CHECK(!is_pivot({{2, 5}}, 0));                 // not 1-prong
    CHECK(!is_pivot({{1, 6}, {3, 2}}, 0));         // other point matches ind*r = 6
    CHECK_THROWS_AS(is_pivot({{1, 2}}, 3), std::invalid_argument);
}

TEST_CASE("admissible orders: the feasibility table") {
    CHECK(admissible_orders(1, 3) == std::set<long long>{1, 2, 3});
    CHECK(admissible_orders(1, 4) == std::set<long long>{1, 2});
    for (long long q = 5; q <= 20; ++q) CHECK(admissible_orders(1, q) == std::set<long long>{1});
    CHECK(admissible_orders(0, 3) == std::set<long long>{1});
    CHECK(admissible_orders(2, 7) == std::set<long long>{1});
    // q > 2*rho + 2 forces order 1, for rho <= 5, q <= 20
    for (long long rho = 0; rho <= 5; ++rho)
        for (long long q = 2 * rho + 3; q <= 20; ++q)
            CHECK(admissible_orders(rho, q) == std::set<long long>{1});
    // antitone in q (set inclusion), genus <= 3, q <= 12
    for (long long genus = 0; genus <= 3; ++genus)
        for (long long q = 1; q < 12; ++q) {
            auto big = admissible_orders(genus, q);
            for (long long m : admissible_orders(genus, q + 1)) CHECK(big.count(m) == 1);
        }
}

TEST_CASE("sphere fixed-point ceiling") {
    for (long long m = 2; m <= 50; ++m) CHECK(max_fixed_points_sphere(m) == 2);
    CHECK_THROWS_AS(max_fixed_points_sphere(1), std::invalid_argument);
}

TEST_CASE("cyclic orbit factorizations") {
    const long long primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41,
                                43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (long long p : primes) CHECK(cyclic_orbit_factorizations(p).empty());
    CHECK(cyclic_orbit_factorizations(1).empty());
    CHECK(cyclic_orbit_factorizations(6) ==
          std::vector<std::pair<long long, long long>>{{2, 3}, {3, 2}});
    CHECK(cyclic_orbit_factorizations(4) == std::vector<std::pair<long long, long long>>{{2, 2}});
}

TEST_CASE("permutation representations and lifting exponents") {
    PermRep flip{2, {Perm{{1, 0}}}};
    FreeEndo inv1(1, {word({-1})});
    CHECK(lift_exponent(flip, inv1, 8) == 1);

    PermRep r2{3, {Perm{{1, 2, 0}}, Perm{{0, 1, 2}}}};
    FreeEndo swap2(2, {word({2}), word({1})});
    CHECK(lift_exponent(r2, swap2, 8) == 2);

    CHECK(lift_exponent(r2, FreeEndo::identity(2), 8) == 1);
    // a cap too small reports NotFound
    CHECK(!lift_exponent(r2, swap2, 1).has_value());
    CHECK_THROWS_AS(lift_exponent(flip, swap2, 8), std::invalid_argument);

    CHECK(r2.transitive());
    PermRep split{4, {Perm{{1, 0, 2, 3}}}};
    CHECK(!split.transitive());
    // the lift exponent is minimal: no smaller power is equivalent
    auto k = lift_exponent(r2, swap2, 8);
    REQUIRE(k.has_value());
    PermRep cur = r2;
    for (int i = 1; i < *k; ++i) {
        cur = precompose(cur, swap2);
        CHECK(!detail::reps_equivalent(cur, r2));
    }
}
