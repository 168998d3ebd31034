#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/free_group.hpp"

using namespace mcg;

namespace {

std::vector<Letter> random_raw(std::mt19937_64& rng, int rank, int len) {
    std::uniform_int_distribution<int> gen(1, rank);
    std::uniform_int_distribution<int> sign(0, 1);
    std::vector<Letter> out;
    for (int i = 0; i < len; ++i) {
        int g = gen(rng);
        out.push_back(sign(rng) ? g : -g);
    }
    return out;
}

FreeEndo random_endo(std::mt19937_64& rng, int rank, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::vector<FreeWord> im;
    for (int g = 1; g <= rank; ++g) im.push_back(FreeWord::reduce(random_raw(rng, rank, len(rng))));
    return FreeEndo(rank, std::move(im));
}

}  // namespace

TEST_CASE("reduce removes adjacent inverse pairs and is idempotent") {
    CHECK(word({1, -1}).is_identity());
    CHECK(word({1, 2, -2, -1}).is_identity());
    CHECK(word({1, 2, -2, 3}) == word({1, 3}));
    CHECK_THROWS_AS(FreeWord::reduce({0}), std::invalid_argument);
    CHECK_THROWS_AS(FreeWord::reduce({3}, 2), std::invalid_argument);

    std::mt19937_64 rng(20260826);
    for (int i = 0; i < 10000; ++i) {
        auto raw = random_raw(rng, 4, 24);
        FreeWord w = FreeWord::reduce(raw);
        CHECK(FreeWord::reduce(w.letters()) == w);  // idempotent
        // no cancellable pair survives
        const auto& ls = w.letters();
        for (std::size_t j = 0; j + 1 < ls.size(); ++j) CHECK(ls[j] != -ls[j + 1]);
    }
}

TEST_CASE("word group laws on samples") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        FreeWord a = FreeWord::reduce(random_raw(rng, 3, 12));
        FreeWord b = FreeWord::reduce(random_raw(rng, 3, 12));
        FreeWord c = FreeWord::reduce(random_raw(rng, 3, 12));
        CHECK((a * b) * c == a * (b * c));
        CHECK((a * a.inverse()).is_identity());
        CHECK((a * b).inverse() == b.inverse() * a.inverse());
    }
}

TEST_CASE("endomorphism application and composition") {
    FreeEndo id = FreeEndo::identity(3);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 1000; ++i) {
        FreeEndo e1 = random_endo(rng, 3, 6);
        FreeEndo e2 = random_endo(rng, 3, 6);
        FreeWord w = FreeWord::reduce(random_raw(rng, 3, 10));
        // (e1 o e2)(w) = e1(e2(w)) — composition is substitution
        CHECK(compose(e1, e2).apply(w) == e1.apply(e2.apply(w)));
        CHECK(compose(id, e1) == e1);
        CHECK(compose(e1, id) == e1);
        // homomorphism property
        FreeWord v = FreeWord::reduce(random_raw(rng, 3, 10));
        CHECK(e1.apply(w * v) == e1.apply(w) * e1.apply(v));
    }
}

TEST_CASE("abelianization is functorial") {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 1000; ++i) {
        FreeEndo e1 = random_endo(rng, 3, 5);
        FreeEndo e2 = random_endo(rng, 3, 5);
        auto a1 = abelianization(e1);
        auto a2 = abelianization(e2);
        auto a12 = abelianization(compose(e1, e2));
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c) {
                std::int64_t s = 0;
                for (int k = 0; k < 3; ++k)
                    s += a1[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)] *
                         a2[static_cast<std::size_t>(k)][static_cast<std::size_t>(c)];
                CHECK(a12[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] == s);
            }
    }
}

TEST_CASE("certified automorphisms reject bad inverse certificates") {
    FreeEndo fwd(2, {word({1, 2}), word({2})});   // x -> xy, y -> y
    FreeEndo bwd(2, {word({1, -2}), word({2})});  // x -> xy^-1, y -> y
    CHECK_NOTHROW(CertifiedAuto(fwd, bwd));
    FreeEndo wrong(2, {word({1, 2}), word({2})});
    CHECK_THROWS_AS(CertifiedAuto(fwd, wrong), std::invalid_argument);
    // non-surjective endomorphism cannot be certified
    FreeEndo squash(2, {word({1}), word({1})});
    CHECK_THROWS_AS(CertifiedAuto(squash, squash), std::invalid_argument);
}
