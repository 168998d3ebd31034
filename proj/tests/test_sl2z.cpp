#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mcg/sl2z.hpp"

using namespace mcg;

namespace {

// All SL2(Z) matrices with |entries| <= bound.
std::vector<Sl2> enumerate_sl2(long long bound) {
    std::vector<Sl2> out;
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c) {
                if (a == 0) {
                    if (b * c != -1) continue;
                    for (long long d = -bound; d <= bound; ++d)
                        out.emplace_back(Int(a), Int(b), Int(c), Int(d));
                } else {
                    long long num = 1 + b * c;
                    if (num % a != 0) continue;
                    long long d = num / a;
                    if (d < -bound || d > bound) continue;
                    out.emplace_back(Int(a), Int(b), Int(c), Int(d));
                }
            }
    return out;
}

Sl2 random_conjugator(std::mt19937_64& rng, int len) {
    // word in the two twist generators; stays in SL2(Z) by construction
    std::uniform_int_distribution<int> pick(0, 3);
    Sl2 g = Sl2::identity();
    Sl2 ta = twist_a_matrix(), tb = twist_b_matrix();
    for (int i = 0; i < len; ++i) {
        switch (pick(rng)) {
            case 0: g = g * ta; break;
            case 1: g = g * ta.inverse(); break;
            case 2: g = g * tb; break;
            default: g = g * tb.inverse(); break;
        }
    }
    return g;
}

}  // namespace

TEST_CASE("element orders: the finite orders are exactly 1,2,3,4,6") {
    CHECK(element_order(Sl2::identity()) == 1);
    CHECK(element_order(Sl2(-1, 0, 0, -1)) == 2);
    CHECK(element_order(Sl2(0, 1, -1, 0)) == 4);
    CHECK(element_order(Sl2(0, 1, -1, 1)) == 6);
    CHECK(element_order(Sl2(-1, 1, -1, 0)) == 3);
    CHECK(!element_order(Sl2(1, 1, 0, 1)).has_value());
    CHECK(!element_order(Sl2(2, 1, 1, 1)).has_value());
    // claimed order is the true minimal power, over a full enumeration
    for (const Sl2& m : enumerate_sl2(3)) {
        auto o = element_order(m);
        if (o) {
            CHECK(pow(m, static_cast<unsigned long>(*o)) == Sl2::identity());
            for (int k = 1; k < *o; ++k)
                CHECK(pow(m, static_cast<unsigned long>(k)) != Sl2::identity());
        } else {
            for (int k = 1; k <= 12; ++k)
                CHECK(pow(m, static_cast<unsigned long>(k)) != Sl2::identity());
        }
    }
}

TEST_CASE("trace classification") {
    CHECK(trace_classify(Sl2::identity()) == TraceClass::CentralPlus);
    CHECK(trace_classify(Sl2(-1, 0, 0, -1)) == TraceClass::CentralMinus);
    CHECK(trace_classify(Sl2(0, 1, -1, 1)) == TraceClass::Elliptic);
    CHECK(trace_classify(Sl2(1, 1, 0, 1)) == TraceClass::Parabolic);
    CHECK(trace_classify(Sl2(2, 1, 1, 1)) == TraceClass::Hyperbolic);
    // finite order iff central or elliptic
    for (const Sl2& m : enumerate_sl2(3)) {
        TraceClass c = trace_classify(m);
        bool fin = element_order(m).has_value();
        CHECK(fin == (c == TraceClass::CentralPlus || c == TraceClass::CentralMinus ||
                      c == TraceClass::Elliptic));
    }
}

TEST_CASE("trace recurrence polynomials satisfy R^m = p_m R - p_{m-1} I") {
    std::mt19937_64 rng(42);
    for (int m = 1; m <= 8; ++m) {
        auto [pm1, pm] = trace_polynomials(m);
        for (int i = 0; i < 50; ++i) {
            Sl2 r = random_conjugator(rng, 6);
            Int t = r.trace();
            Int cm = eval_poly(pm, t), cm1 = eval_poly(pm1, t);
            Sl2 lhs = pow(r, static_cast<unsigned long>(m));
            CHECK(lhs.a == cm * r.a - cm1);
            CHECK(lhs.b == cm * r.b);
            CHECK(lhs.c == cm * r.c);
            CHECK(lhs.d == cm * r.d - cm1);
        }
    }
}

TEST_CASE("mth_roots worked examples") {
    // square of the shear: both +shear and -shear square to it
    Sl2 shear(1, 1, 0, 1);
    auto rs = mth_roots(shear * shear, 2);
    REQUIRE(rs.kind == RootSet::Kind::Finite);
    REQUIRE(rs.roots.size() == 2);
    CHECK(rs.roots[0] == -shear);
    CHECK(rs.roots[1] == shear);
    // hyperbolic example [[2,1],[1,1]] has no square root in SL2(Z)
    CHECK(mth_roots(Sl2(2, 1, 1, 1), 2).roots.empty());
    // -I: torsion families with square -I are the order-4 and the two order-6
    // and... enumerate and cross-check by direct powering
    auto fam = mth_roots(Sl2(-1, 0, 0, -1), 2);
    REQUIRE(fam.kind == RootSet::Kind::TorsionFamily);
    for (TorsionLabel l : all_torsion_labels()) {
        bool in = std::find(fam.family.begin(), fam.family.end(), l) != fam.family.end();
        CHECK(in == (pow(torsion_representative(l), 2) == Sl2(-1, 0, 0, -1)));
    }
    CHECK(!fam.family.empty());
}

TEST_CASE("mth_roots agrees with the brute-force oracle on an exhaustive slab") {
    for (const Sl2& m_mat : enumerate_sl2(2)) {
        if (m_mat.is_central()) continue;
        for (int m = 1; m <= 4; ++m) {
            auto fast = mth_roots(m_mat, m).roots;
            auto slow = brute_force_roots(m_mat, m, 8);
            // oracle only sees roots with entries <= 8; every fast root in
            // range must appear, and no oracle root may be missing from fast
            for (const Sl2& r : slow)
                CHECK(std::find(fast.begin(), fast.end(), r) != fast.end());
            for (const Sl2& r : fast)
                if (r.max_abs_entry() <= 8)
                    CHECK(std::find(slow.begin(), slow.end(), r) != slow.end());
        }
    }
}

TEST_CASE("torsion_class separates the eight classes and is conjugation-invariant") {
    std::mt19937_64 rng(99);
    for (TorsionLabel l : all_torsion_labels()) {
        Sl2 rep = torsion_representative(l);
        CHECK(torsion_class(rep) == l);
        CHECK(element_order(rep) == torsion_label_order(l));
        for (int i = 0; i < 1000; ++i) {
            Sl2 g = random_conjugator(rng, 8);
            CHECK(torsion_class(g * rep * g.inverse()) == l);
        }
    }
    CHECK_THROWS_AS(torsion_class(Sl2(1, 1, 0, 1)), std::invalid_argument);
}

TEST_CASE("brute_force_roots rejects unsafe bounds") {
    CHECK_THROWS_AS(brute_force_roots(Sl2(2, 1, 1, 1), 12, 1000), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_roots(Sl2(2, 1, 1, 1), 1, 0), std::invalid_argument);
}
