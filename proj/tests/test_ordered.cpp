#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/ordered.hpp"

using namespace mcg;

namespace {

ZqLex::Elem random_elem(std::mt19937_64& rng, int q) {
    ZqLex::Elem v(static_cast<std::size_t>(q));
    for (auto& x : v) x = static_cast<long long>(rng() % 21) - 10;
    return v;
}

}  // namespace

TEST_CASE("lexicographic order on Z^q is a bi-invariant total order") {
    std::mt19937_64 rng(271828);
    for (int q = 1; q <= 5; ++q) {
        ZqLex G{q};
        for (int i = 0; i < 2000; ++i) {
            auto a = random_elem(rng, q);
            auto b = random_elem(rng, q);
            auto c = random_elem(rng, q);
            Ordering ab = G.compare(a, b);
            // totality + antisymmetry
            Ordering ba = G.compare(b, a);
            if (ab == Ordering::Less) CHECK(ba == Ordering::Greater);
            if (ab == Ordering::Equal) CHECK(ba == Ordering::Equal);
            // translation invariance on both sides (abelian so they agree,
            // but check the multiplication explicitly)
            CHECK(G.compare(G.multiply(c, a), G.multiply(c, b)) == ab);
            CHECK(G.compare(G.multiply(a, c), G.multiply(b, c)) == ab);
            // transitivity spot check
            if (ab == Ordering::Less && G.compare(b, c) == Ordering::Less)
                CHECK(G.compare(a, c) == Ordering::Less);
        }
    }
}

TEST_CASE("positivity cone of the lex order is closed under products") {
    std::mt19937_64 rng(99);
    ZqLex G{4};
    auto e = G.identity();
    int seen = 0;
    while (seen < 2000) {
        auto a = random_elem(rng, 4);
        auto b = random_elem(rng, 4);
        if (G.compare(a, e) != Ordering::Greater) continue;
        if (G.compare(b, e) != Ordering::Greater) continue;
        ++seen;
        CHECK(G.compare(G.multiply(a, b), e) == Ordering::Greater);
        // inverse of positive is negative
        CHECK(G.compare(G.inverse(a), e) == Ordering::Less);
    }
}

TEST_CASE("powers are strictly monotone in the exponent") {
    std::mt19937_64 rng(7);
    ZqLex G{3};
    auto e = G.identity();
    for (int i = 0; i < 500; ++i) {
        auto a = random_elem(rng, 3);
        Ordering sign = G.compare(a, e);
        if (sign == Ordering::Equal) continue;
        for (int m = 1; m < 10; ++m)
            CHECK(G.compare(G.power(a, m + 1), G.power(a, m)) == sign);
    }
}

TEST_CASE("lexicographic extension compares quotient first") {
    LexExtension E{2, 1};
    LexExtension::Elem x{{0, 5}, {100}};
    LexExtension::Elem y{{1, -5}, {-100}};
    CHECK(E.compare(x, y) == Ordering::Less);
    LexExtension::Elem z{{0, 5}, {99}};
    CHECK(E.compare(x, z) == Ordering::Greater);
    CHECK(E.compare(x, x) == Ordering::Equal);
    CHECK(E.compare(E.multiply(x, E.inverse(x)), E.identity()) == Ordering::Equal);
}

TEST_CASE("lexicographic extension is bi-invariant and monotone on powers") {
    std::mt19937_64 rng(5150);
    LexExtension E{3, 2};
    auto rand_ext = [&]() {
        return LexExtension::Elem{random_elem(rng, 3), random_elem(rng, 2)};
    };
    auto e = E.identity();
    for (int i = 0; i < 2000; ++i) {
        auto a = rand_ext();
        auto b = rand_ext();
        auto c = rand_ext();
        Ordering ab = E.compare(a, b);
        CHECK(E.compare(E.multiply(c, a), E.multiply(c, b)) == ab);
        CHECK(E.compare(E.multiply(a, c), E.multiply(b, c)) == ab);
        Ordering sign = E.compare(a, e);
        if (sign != Ordering::Equal)
            for (int m = 1; m <= 5; ++m)
                CHECK(E.compare(E.power(a, m + 1), E.power(a, m)) == sign);
    }
}

TEST_CASE("equal powers force equal elements in a bi-ordered group") {
    std::mt19937_64 rng(424242);
    ZqLex G{4};
    LexExtension E{2, 2};
    int trials = 0;
    while (trials < 10000) {
        auto f = random_elem(rng, 4);
        auto h = random_elem(rng, 4);
        int m = 1 + static_cast<int>(rng() % 8);
        ++trials;
        CHECK(unique_root_check(G, f, h, m));
        LexExtension::Elem fe{{f[0], f[1]}, {f[2], f[3]}};
        LexExtension::Elem he{{h[0], h[1]}, {h[2], h[3]}};
        CHECK(unique_root_check(E, fe, he, m));
    }
    // degenerate exponent is rejected
    CHECK_THROWS_AS(unique_root_check(G, G.identity(), G.identity(), 0),
                    std::invalid_argument);
}
