#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/twist_catalogue.hpp"

using namespace mcg;

namespace {

const std::vector<std::string> model_names = {"torus_closed_h1only", "genus1_q1", "genus1_q2",
                                              "genus1_q3", "genus1_q4"};

TwistWord random_word(std::mt19937_64& rng, const SurfaceModel& m, int len) {
    std::uniform_int_distribution<std::size_t> pick(0, m.curves.size() - 1);
    std::uniform_int_distribution<int> expo(-2, 2);
    TwistWord w;
    for (int i = 0; i < len; ++i) {
        int e = expo(rng);
        if (e == 0) e = 1;
        w.factors.emplace_back(m.curves[pick(rng)].name, e);
    }
    return w;
}

std::vector<std::vector<long long>> mat_mul(const std::vector<std::vector<long long>>& x,
                                            const std::vector<std::vector<long long>>& y) {
    std::vector<std::vector<long long>> z(2, std::vector<long long>(2, 0));
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                z[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                    x[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] *
                    y[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)];
    return z;
}

}  // namespace

TEST_CASE("model shapes match the catalogue contract") {
    CHECK(model("genus1_q3").pi1_rank == 4);
    CHECK(model("genus1_q3").curves.size() == 7);
    CHECK(model("genus1_q4").pi1_rank == 5);
    CHECK(model("genus1_q1").pi1_rank == 2);
    CHECK(model("genus1_q1").curves.size() == 3);  // a, b, c1
    CHECK(model("torus_closed_h1only").boundary_count == 0);
    CHECK_THROWS_AS(model("genus2_q1"), std::invalid_argument);
    for (const auto& n : model_names) {
        SurfaceModel m = model(n);
        int expected_rank =
            (m.boundary_count == 0) ? 2 * m.genus : 2 * m.genus + m.boundary_count - 1;
        CHECK(m.pi1_rank == expected_rank);
        CHECK(static_cast<int>(m.boundary_words.size()) == m.boundary_count);
    }
}

TEST_CASE("certification suite passes on every shipped model, clause by clause") {
    for (const auto& n : model_names) {
        CertReport r = certify_model(model(n));
        INFO(n);
        for (const auto& f : r.failures) INFO(f);
        CHECK(r.passed);
        CHECK(r.checks.size() == 6);
    }
}

TEST_CASE("mutation test: a corrupted twist table fails the braid clause") {
    SurfaceModel m = model("genus1_q2");
    // replace tau_b with a commuting-only table (the a1-twist's), so the
    // braid relation with a1 degenerates
    for (auto& c : m.curves)
        if (c.name == "b") c.twist = m.curve("a2").twist;
    CertReport r = certify_model(m);
    CHECK(!r.passed);
    bool braid_named = false;
    for (const auto& f : r.failures)
        if (f.find("clause (ii)") != std::string::npos) braid_named = true;
    CHECK(braid_named);
}

TEST_CASE("evaluate basics") {
    SurfaceModel m = model("genus1_q3");
    CHECK(evaluate(m, TwistWord{}).is_identity());
    CHECK(evaluate(m, TwistWord{{{"a1", 1}, {"a1", -1}}}).is_identity());
    CHECK(verify_relation(m, TwistWord{{{"a1", 1}, {"b", 1}, {"a1", 1}}},
                          TwistWord{{{"b", 1}, {"a1", 1}, {"b", 1}}}));
    CHECK_THROWS_AS(evaluate(m, TwistWord{{{"z", 1}}}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(m, TwistWord{{{"a1", 0}}}), std::invalid_argument);
    CHECK_THROWS_AS(evaluate(m, TwistWord{{{"a1", 17}}}), std::invalid_argument);
}

TEST_CASE("named relations hold and near-misses fail") {
    for (const auto& id : all_relation_ids()) {
        NamedRelation nr = named_relation(id);
        SurfaceModel m = model(nr.model_name);
        CHECK(verify_relation(m, nr.lhs, nr.rhs));
    }
    // g0^2 is not the boundary product
    SurfaceModel q3 = model("genus1_q3");
    CHECK(!verify_relation(q3, power_word(relation_word("g0_q3"), 2), boundary_product(3)));
    CHECK_THROWS_AS(named_relation("lemma0.0"), std::invalid_argument);
}

TEST_CASE("verified relations are conjugation-stable") {
    std::mt19937_64 rng(5);
    for (const auto& id : all_relation_ids()) {
        NamedRelation nr = named_relation(id);
        SurfaceModel m = model(nr.model_name);
        std::uniform_int_distribution<std::size_t> pick(0, m.curves.size() - 1);
        for (int i = 0; i < 50; ++i) {
            const std::string& cn = m.curves[pick(rng)].name;
            TwistWord lhs, rhs;
            lhs.factors.emplace_back(cn, 1);
            lhs.factors.insert(lhs.factors.end(), nr.lhs.factors.begin(), nr.lhs.factors.end());
            lhs.factors.emplace_back(cn, -1);
            rhs.factors.emplace_back(cn, 1);
            rhs.factors.insert(rhs.factors.end(), nr.rhs.factors.begin(), nr.rhs.factors.end());
            rhs.factors.emplace_back(cn, -1);
            CHECK(verify_relation(m, lhs, rhs));
        }
    }
}

TEST_CASE("h1_matrix: transvections, boundary triviality, multiplicativity") {
    SurfaceModel q1 = model("genus1_q1");
    auto ta = h1_matrix(q1, TwistWord{{{"a", 1}}});
    CHECK(ta == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
    auto tb = h1_matrix(q1, TwistWord{{{"b", 1}}});
    CHECK(tb == std::vector<std::vector<long long>>{{1, 0}, {-1, 1}});
    auto tc = h1_matrix(q1, TwistWord{{{"c1", 1}}});
    CHECK(tc == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

    SurfaceModel q3 = model("genus1_q3");
    auto g12 = h1_matrix(q3, power_word(relation_word("g0_q3"), 12));
    CHECK(g12 == std::vector<std::vector<long long>>{{1, 0}, {0, 1}});

    std::mt19937_64 rng(17);
    for (const auto& n : model_names) {
        SurfaceModel m = model(n);
        for (int i = 0; i < 200; ++i) {
            TwistWord w1 = random_word(rng, m, 3);
            TwistWord w2 = random_word(rng, m, 3);
            TwistWord cat = w1;
            cat.factors.insert(cat.factors.end(), w2.factors.begin(), w2.factors.end());
            CHECK(h1_matrix(m, cat) == mat_mul(h1_matrix(m, w1), h1_matrix(m, w2)));
        }
    }
}

TEST_CASE("central power exponents") {
    CHECK(central_power_exponents(2, {0, 0, 0}, 6) == std::vector<long long>{3, 3, 3});
    CHECK(central_power_exponents(3, {1, 0, -1}, 6) == std::vector<long long>{8, 2, -4});
    CHECK(central_power_exponents(1, {5, -2}, 1) == std::vector<long long>{6, -1});
    CHECK_THROWS_AS(central_power_exponents(4, {0}, 6), std::invalid_argument);
}
