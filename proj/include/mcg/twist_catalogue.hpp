#pragma once

// Catalogued bordered-surface models with certified Dehn-twist automorphisms.
//
// Each genus-1 model with q boundary components is a ribbon neighborhood of
// the spine "b-cycle with loops a_1..a_q"; pi1 is free on
//   A_1, ..., A_q (letters 1..q, the a-loops) and B (letter q+1, the b-cycle)
// with the basepoint on the boundary component c_1.  The twist tables are
// hand-encoded from this model and certified at construction:
//   tau_{a_i}: A_j -> A_j (j <= i),  A_j -> A_i A_j A_i^-1 (j > i),  B -> A_i B
//   tau_b:     A_i -> B^-1 A_i,      B -> B
// Boundary words: c_1 = B^-1 A_q^-1 B A_1 (exactly fixed by every twist);
// c_j = A_{j-1}^-1 A_j for j >= 2 (fixed by every twist up to cyclic
// rotation — exact fixing of all boundary words simultaneously is impossible
// for q >= 2, since any arc from the basepoint to another boundary component
// crosses a twist curve).  The boundary twist about c_1 is conjugation by
// the c_1 word — the genuine pi1 action with the basepoint on c_1; boundary
// twists about the other components act trivially on pi1 and are encoded as
// the identity automorphism.

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "free_group.hpp"

namespace mcg {

struct CurveDatum {
    std::string name;
    CertifiedAuto twist;
    bool is_boundary = false;
    std::vector<long long> homology;  // class in the genus H1 summand ([a],[b])
};

struct TwistWord {
    std::vector<std::pair<std::string, int>> factors;  // (curve, exponent != 0)
};

struct SurfaceModel {
    std::string name;
    int genus = 1;
    int boundary_count = 0;
    int pi1_rank = 0;
    std::vector<CurveDatum> curves;               // catalogue order
    std::vector<FreeWord> boundary_words;         // one per boundary component
    std::map<std::pair<std::string, std::string>, int> intersection;
    std::vector<std::vector<long long>> intersection_form;  // on ([a],[b])

    const CurveDatum& curve(const std::string& n) const {
        for (const auto& c : curves)
            if (c.name == n) return c;
        throw std::invalid_argument("unknown curve: " + n);
    }
    bool has_curve(const std::string& n) const {
        for (const auto& c : curves)
            if (c.name == n) return true;
        return false;
    }
    int intersect(const std::string& x, const std::string& y) const {
        auto it = intersection.find(x <= y ? std::make_pair(x, y) : std::make_pair(y, x));
        return it == intersection.end() ? 0 : it->second;
    }
};

namespace detail {

inline FreeEndo genus1_tau_a(int q, int i) {
    int n = q + 1, b = q + 1;
    std::vector<FreeWord> im;
    for (int j = 1; j <= q; ++j)
        im.push_back(j <= i ? word({j}) : word({i, j, -i}));
    im.push_back(word({i, b}));
    return FreeEndo(n, std::move(im));
}
inline FreeEndo genus1_tau_a_inv(int q, int i) {
    int n = q + 1, b = q + 1;
    std::vector<FreeWord> im;
    for (int j = 1; j <= q; ++j)
        im.push_back(j <= i ? word({j}) : word({-i, j, i}));
    im.push_back(word({-i, b}));
    return FreeEndo(n, std::move(im));
}
inline FreeEndo genus1_tau_b(int q) {
    int n = q + 1, b = q + 1;
    std::vector<FreeWord> im;
    for (int j = 1; j <= q; ++j) im.push_back(word({-b, j}));
    im.push_back(word({b}));
    return FreeEndo(n, std::move(im));
}
inline FreeEndo genus1_tau_b_inv(int q) {
    int n = q + 1, b = q + 1;
    std::vector<FreeWord> im;
    for (int j = 1; j <= q; ++j) im.push_back(word({b, j}));
    im.push_back(word({b}));
    return FreeEndo(n, std::move(im));
}
inline FreeEndo inner_by(int rank, const FreeWord& w) {
    std::vector<FreeWord> im;
    for (int g = 1; g <= rank; ++g) im.push_back(w * word({g}) * w.inverse());
    return FreeEndo(rank, std::move(im));
}

inline SurfaceModel build_genus1(const std::string& name, int q, bool closed_h1only) {
    SurfaceModel m;
    m.name = name;
    m.genus = 1;
    m.boundary_count = closed_h1only ? 0 : q;
    m.pi1_rank = closed_h1only ? 2 : q + 1;
    m.intersection_form = {{0, -1}, {1, 0}};  // <b,a> = +1 on basis ([a],[b])
    int rank = m.pi1_rank;

    auto add_curve = [&](const std::string& cn, FreeEndo fw, FreeEndo bw, bool bdry,
                         std::vector<long long> h) {
        CurveDatum cd;
        cd.name = cn;
        cd.twist = CertifiedAuto(std::move(fw), std::move(bw));
        cd.is_boundary = bdry;
        cd.homology = std::move(h);
        m.curves.push_back(std::move(cd));
    };

    std::vector<std::string> a_names;
    for (int i = 1; i <= q; ++i) {
        std::string cn = (q == 1) ? "a" : "a" + std::to_string(i);
        a_names.push_back(cn);
        add_curve(cn, genus1_tau_a(q, i), genus1_tau_a_inv(q, i), false, {1, 0});
    }
    add_curve("b", genus1_tau_b(q), genus1_tau_b_inv(q), false, {0, 1});

    if (!closed_h1only) {
        // boundary words: c_1 = B^-1 A_q^-1 B A_1; c_j = A_{j-1}^-1 A_j
        int bl = q + 1;
        m.boundary_words.push_back(word({-bl, -q, bl, 1}));
        for (int j = 2; j <= q; ++j) m.boundary_words.push_back(word({-(j - 1), j}));
        for (int j = 1; j <= q; ++j) {
            std::string cn = "c" + std::to_string(j);
            FreeEndo fw = (j == 1) ? inner_by(rank, m.boundary_words[0])
                                   : FreeEndo::identity(rank);
            FreeEndo bw = (j == 1) ? inner_by(rank, m.boundary_words[0].inverse())
                                   : FreeEndo::identity(rank);
            add_curve(cn, std::move(fw), std::move(bw), true, {0, 0});
        }
    }

    // geometric intersection numbers: i(a_i, b) = 1, everything else 0
    for (const auto& an : a_names) {
        auto key = an <= "b" ? std::make_pair(an, std::string("b"))
                             : std::make_pair(std::string("b"), an);
        m.intersection[key] = 1;
    }
    return m;
}

}  // namespace detail

inline SurfaceModel model(const std::string& name) {
    if (name == "torus_closed_h1only") return detail::build_genus1(name, 1, true);
    if (name == "genus1_q1") return detail::build_genus1(name, 1, false);
    if (name == "genus1_q2") return detail::build_genus1(name, 2, false);
    if (name == "genus1_q3") return detail::build_genus1(name, 3, false);
    if (name == "genus1_q4") return detail::build_genus1(name, 4, false);
    throw std::invalid_argument("unknown model: " + name);
}

// Composition of the certified twists, left factor applied last.
inline FreeEndo evaluate(const SurfaceModel& m, const TwistWord& w) {
    if (w.factors.size() > 64)
        throw std::invalid_argument("evaluate: word longer than cap 64");
    FreeEndo acc = FreeEndo::identity(m.pi1_rank);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) {
        const auto& [cn, e] = *it;
        if (e == 0 || e > 16 || e < -16)
            throw std::invalid_argument("evaluate: exponent out of range");
        const CertifiedAuto& t = m.curve(cn).twist;
        const FreeEndo& step = (e > 0) ? t.forward() : t.backward();
        for (int k = 0; k < (e > 0 ? e : -e); ++k) acc = compose(step, acc);
    }
    return acc;
}

inline bool verify_relation(const SurfaceModel& m, const TwistWord& lhs, const TwistWord& rhs) {
    return equal(evaluate(m, lhs), evaluate(m, rhs));
}

namespace detail {
// project the full abelianization onto the genus summand ([a],[b]):
// A_i -> a, B -> b, boundary classes -> 0.  Well-defined for catalogue
// twists because they preserve the projection's kernel.
inline std::vector<std::vector<long long>> genus_h1(const SurfaceModel& m, const FreeEndo& e) {
    auto full = abelianization(e);
    int n = e.rank();
    int q = (m.boundary_count > 0) ? m.boundary_count : 1;  // A-letters 1..q, B = q+1
    std::vector<std::vector<long long>> out(2, std::vector<long long>(2, 0));
    // column of generator j projects to pi(image_j); pi(A_i) = (1,0), pi(B) = (0,1).
    // Using generator A_1 (column 1) and B (column q+1) as section of the summand.
    int cols[2] = {0, q};  // 0-based columns for A_1 and B
    for (int cidx = 0; cidx < 2; ++cidx) {
        long long asum = 0, bsum = 0;
        for (int i = 0; i < n; ++i) {
            long long v = full[static_cast<std::size_t>(i)][static_cast<std::size_t>(cols[cidx])];
            if (i < q) asum += v;  // A-letter rows
            else bsum += v;        // B row
        }
        out[0][static_cast<std::size_t>(cidx)] = asum;
        out[1][static_cast<std::size_t>(cidx)] = bsum;
    }
    return out;
}
}  // namespace detail

// Action on the genus H1 summand ([a],[b]); boundary twists give the identity.
inline std::vector<std::vector<long long>> h1_matrix(const SurfaceModel& m, const TwistWord& w) {
    return detail::genus_h1(m, evaluate(m, w));
}

// ---------------------------------------------------------------------------
// certification

struct CertReport {
    bool passed = true;
    std::vector<std::string> failures;  // "clause (ii): ..." etc.
    std::vector<std::string> checks;    // human-readable log of clauses run

    void fail(const std::string& msg) {
        passed = false;
        failures.push_back(msg);
    }
};

namespace detail {
inline std::vector<Letter> cyclic_reduction(const FreeWord& w) {
    std::vector<Letter> v = w.letters();
    std::size_t lo = 0, hi = v.size();
    while (hi - lo >= 2 && v[lo] == -v[hi - 1]) { ++lo; --hi; }
    return std::vector<Letter>(v.begin() + static_cast<std::ptrdiff_t>(lo),
                               v.begin() + static_cast<std::ptrdiff_t>(hi));
}

// Equality as cyclic words (i.e. conjugacy in the free group).
inline bool cyclic_equal(const FreeWord& x, const FreeWord& y) {
    std::vector<Letter> a = cyclic_reduction(x);
    std::vector<Letter> b = cyclic_reduction(y);
    if (a.size() != b.size()) return false;
    std::size_t n = a.size();
    if (n == 0) return true;

    for (std::size_t r = 0; r < n; ++r) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i)
            if (a[i] != b[(i + r) % n]) ok = false;
        if (ok) return true;
    }
    return false;
}

inline std::vector<std::vector<long long>> transvection(const SurfaceModel& m,
                                                        const std::vector<long long>& h) {
    // x -> x + <x, h> h with the model's intersection form
    std::vector<std::vector<long long>> t(2, std::vector<long long>(2, 0));
    for (int col = 0; col < 2; ++col) {
        long long x0 = (col == 0), x1 = (col == 1);
        long long pair = 0;  // <x, h> = x^T J h
        pair += x0 * (m.intersection_form[0][0] * h[0] + m.intersection_form[0][1] * h[1]);
        pair += x1 * (m.intersection_form[1][0] * h[0] + m.intersection_form[1][1] * h[1]);
        t[0][static_cast<std::size_t>(col)] = x0 + pair * h[0];
        t[1][static_cast<std::size_t>(col)] = x1 + pair * h[1];
    }
    return t;
}
}  // namespace detail

// Runs the certification suite:
//   (i)   intersection-0 curve pairs commute as automorphisms
//   (ii)  intersection-1 pairs satisfy the braid relation
//   (iii) each boundary twist commutes with every catalogued twist
//   (iv)  every twist fixes the basepoint boundary word exactly, and fixes
//         every boundary word up to cyclic rotation
//   (v)   h1_matrix of each single twist equals the transvection by its class
//   (vi)  every CertifiedAuto inverse check passes
inline CertReport certify_model(const SurfaceModel& m) {
    CertReport r;
    const auto& cs = m.curves;
    // (i) / (ii)
    for (std::size_t x = 0; x < cs.size(); ++x)
        for (std::size_t y = x + 1; y < cs.size(); ++y) {
            const FreeEndo& fx = cs[x].twist.forward();
            const FreeEndo& fy = cs[y].twist.forward();
            int in = m.intersect(cs[x].name, cs[y].name);
            if (in == 0) {
                if (compose(fx, fy) != compose(fy, fx))
                    r.fail("clause (i): " + cs[x].name + "," + cs[y].name + " do not commute");
            } else if (in == 1) {
                FreeEndo lhs = compose(fx, compose(fy, fx));
                FreeEndo rhs = compose(fy, compose(fx, fy));
                if (lhs != rhs)
                    r.fail("clause (ii): braid fails for " + cs[x].name + "," + cs[y].name);
            }
        }
    r.checks.push_back("(i) commutation of intersection-0 pairs");
    r.checks.push_back("(ii) braid relation for intersection-1 pairs");
    // (iii)
    for (const auto& bc : cs) {
        if (!bc.is_boundary) continue;
        for (const auto& oc : cs)
            if (compose(bc.twist.forward(), oc.twist.forward()) !=
                compose(oc.twist.forward(), bc.twist.forward()))
                r.fail("clause (iii): boundary twist " + bc.name + " vs " + oc.name);
    }
    r.checks.push_back("(iii) boundary twists central among catalogue twists");
    // (iv)
    for (const auto& c : cs)
        for (std::size_t j = 0; j < m.boundary_words.size(); ++j) {
            FreeWord im = c.twist.forward().apply(m.boundary_words[j]);
            if (j == 0 && im != m.boundary_words[j])
                r.fail("clause (iv): " + c.name + " moves the basepoint boundary word");
            if (!detail::cyclic_equal(im, m.boundary_words[j]))
                r.fail("clause (iv): " + c.name + " moves boundary word c" + std::to_string(j + 1) +
                       " beyond cyclic rotation");
        }
    r.checks.push_back("(iv) boundary words fixed (basepoint word exactly, others cyclically)");
    // (v)
    for (const auto& c : cs) {
        TwistWord tw;
        tw.factors = {{c.name, 1}};
        auto got = h1_matrix(m, tw);
        auto want = c.is_boundary
                        ? std::vector<std::vector<long long>>{{1, 0}, {0, 1}}
                        : detail::transvection(m, c.homology);
        if (got != want) r.fail("clause (v): h1 transvection fails for " + c.name);
    }
    r.checks.push_back("(v) single-twist h1 action is the transvection");
    // (vi)
    for (const auto& c : cs)
        if (!compose(c.twist.forward(), c.twist.backward()).is_identity() ||
            !compose(c.twist.backward(), c.twist.forward()).is_identity())
            r.fail("clause (vi): inverse certificate fails for " + c.name);
    r.checks.push_back("(vi) certified inverses");
    return r;
}

// ---------------------------------------------------------------------------
// named relations and central-power bookkeeping

// g0 = tau_{a1} ... tau_{aq} tau_b ; f0 as in the chain/crossed words.
inline TwistWord relation_word(const std::string& which) {
    TwistWord w;
    if (which == "g0_q3") w.factors = {{"a1", 1}, {"a2", 1}, {"a3", 1}, {"b", 1}};
    else if (which == "f0_q3")
        w.factors = {{"a1", 1}, {"b", 1}, {"a2", 1}, {"b", 1}, {"a3", 1}, {"b", 1}};
    else if (which == "f0_q4")
        w.factors = {{"a1", 1}, {"a3", 1}, {"b", 1}, {"a2", 1}, {"a4", 1}, {"b", 1}};
    else throw std::invalid_argument("unknown relation word: " + which);
    return w;
}

inline TwistWord power_word(const TwistWord& w, int k) {
    TwistWord out;
    for (int i = 0; i < k; ++i)
        out.factors.insert(out.factors.end(), w.factors.begin(), w.factors.end());
    return out;
}

inline TwistWord boundary_product(int q) {
    TwistWord w;
    for (int j = 1; j <= q; ++j) w.factors.emplace_back("c" + std::to_string(j), 1);
    return w;
}

struct NamedRelation {
    std::string id;
    std::string model_name;
    TwistWord lhs, rhs;
};

// Frozen relation ids: lemma7.9.star (g0^3), lemma7.9.chain (f0^2) on
// genus1_q3; lemma7.10 (f0^2) on genus1_q4 — all equal the product of the
// boundary twists.
inline NamedRelation named_relation(const std::string& id) {
    NamedRelation r;
    r.id = id;
    if (id == "lemma7.9.star") {
        r.model_name = "genus1_q3";
        r.lhs = power_word(relation_word("g0_q3"), 3);
        r.rhs = boundary_product(3);
    } else if (id == "lemma7.9.chain") {
        r.model_name = "genus1_q3";
        r.lhs = power_word(relation_word("f0_q3"), 2);
        r.rhs = boundary_product(3);
    } else if (id == "lemma7.10") {
        r.model_name = "genus1_q4";
        r.lhs = power_word(relation_word("f0_q4"), 2);
        r.rhs = boundary_product(4);
    } else {
        throw std::invalid_argument("unknown relation id: " + id);
    }
    return r;
}

inline const std::vector<std::string>& all_relation_ids() {
    static const std::vector<std::string> ids = {"lemma7.9.star", "lemma7.9.chain", "lemma7.10"};
    return ids;
}

// Exponent vector (k*x_i + k/o) of the boundary-twist expression for the
// k-th power of a periodic element of corked order o with twist offsets xs.
inline std::vector<long long> central_power_exponents(long long o, const std::vector<long long>& xs,
                                                      long long k) {
    if (o < 1 || k < 1 || k % o != 0)
        throw std::invalid_argument("central_power_exponents: o must divide k");
    std::vector<long long> out;
    out.reserve(xs.size());
    for (long long x : xs) out.push_back(k * x + k / o);
    return out;
}

}  // namespace mcg
