#pragma once

// Exact computation in the finite symmetry groups that occur as centralizer
// quotients: dihedral groups D_{2n} = <R, S | R^n, S^2, (RS)^2> and their
// products with a central C_2 factor generated by T.
//
// Elements are normal forms R^k S^s T^t with k mod n, s in {0,1},
// t in {0,1} (t always 0 when the group has no T factor).  The product rule
// is R^{k1} S^{s1} * R^{k2} S^{s2} = R^{k1 + (-1)^{s1} k2} S^{s1+s2},
// with T central.

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

enum class SymKind { Dihedral, DihedralTimesC2 };

struct SymGroup {
    SymKind kind;
    int n;  // rotation order; group order is 2n or 4n

    int order() const { return (kind == SymKind::Dihedral ? 2 : 4) * n; }
    bool has_t() const { return kind == SymKind::DihedralTimesC2; }
};

struct SymElement {
    int k = 0;  // rotation exponent mod n
    int s = 0;  // reflection bit
    int t = 0;  // central C_2 bit

    friend bool operator==(const SymElement& a, const SymElement& b) {
        return a.k == b.k && a.s == b.s && a.t == b.t;
    }
    friend bool operator!=(const SymElement& a, const SymElement& b) { return !(a == b); }
    friend bool operator<(const SymElement& a, const SymElement& b) {
        if (a.s != b.s) return a.s < b.s;
        if (a.t != b.t) return a.t < b.t;
        return a.k < b.k;
    }
};

// "D2n:<n>" or "D2nxC2:<n>"
inline SymGroup parse_group(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("group spec needs ':'");
    std::string head = spec.substr(0, colon);
    int n = std::stoi(spec.substr(colon + 1));
    if (n < 1) throw std::invalid_argument("group spec: n must be positive");
    if (head == "D2n") return SymGroup{SymKind::Dihedral, n};
    if (head == "D2nxC2") return SymGroup{SymKind::DihedralTimesC2, n};
    throw std::invalid_argument("unknown group family: " + head);
}

// "R^k", "R^k*S", "R^k*S*T", "S", "T", "id", ... — factors separated by '*'.
inline SymElement parse_element(const SymGroup& g, const std::string& spec) {
    SymElement e;
    if (spec == "id" || spec == "1") return e;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t star = spec.find('*', pos);
        std::string tok = spec.substr(pos, star == std::string::npos ? std::string::npos : star - pos);
        pos = (star == std::string::npos) ? spec.size() : star + 1;
        if (tok == "S") e.s ^= 1;
        else if (tok == "T") {
            if (!g.has_t()) throw std::invalid_argument("group has no T factor");
            e.t ^= 1;
        } else if (tok == "R") e.k = (e.k + 1) % g.n;
        else if (tok.rfind("R^", 0) == 0) {
            int p = std::stoi(tok.substr(2));
            e.k = ((e.k + p) % g.n + g.n) % g.n;
        } else throw std::invalid_argument("bad element token: " + tok);
    }
    return e;
}

inline std::string element_str(const SymGroup&, const SymElement& e) {
    std::string s;
    if (e.k != 0) s = "R^" + std::to_string(e.k);
    if (e.s) s += (s.empty() ? "S" : "*S");
    if (e.t) s += (s.empty() ? "T" : "*T");
    return s.empty() ? "id" : s;
}

inline SymElement multiply(const SymGroup& g, const SymElement& a, const SymElement& b) {
    SymElement e;
    int kb = a.s ? -b.k : b.k;
    e.k = ((a.k + kb) % g.n + g.n) % g.n;
    e.s = (a.s + b.s) % 2;
    e.t = (a.t + b.t) % 2;
    return e;
}

inline SymElement inverse(const SymGroup& g, const SymElement& a) {
    SymElement e;
    e.k = a.s ? a.k : ((g.n - a.k) % g.n);
    e.s = a.s;
    e.t = a.t;
    return e;
}

inline int elem_order(const SymGroup& g, const SymElement& a) {
    SymElement e = a;
    int o = 1;
    SymElement id{};
    while (e != id) {
        e = multiply(g, e, a);
        ++o;
        if (o > g.order()) throw std::logic_error("element_order: runaway");
    }
    return o;
}

inline bool commutes(const SymGroup& g, const SymElement& a, const SymElement& b) {
    return multiply(g, a, b) == multiply(g, b, a);
}

inline SymElement conjugate(const SymGroup& g, const SymElement& x, const SymElement& by) {
    return multiply(g, multiply(g, by, x), inverse(g, by));
}

inline std::vector<SymElement> all_elements(const SymGroup& g) {
    std::vector<SymElement> out;
    out.reserve(static_cast<std::size_t>(g.order()));
    for (int t = 0; t <= (g.has_t() ? 1 : 0); ++t)
        for (int s = 0; s <= 1; ++s)
            for (int k = 0; k < g.n; ++k) out.push_back(SymElement{k, s, t});
    return out;
}

inline std::vector<SymElement> elements_of_order(const SymGroup& g, int o) {
    std::vector<SymElement> out;
    for (const SymElement& e : all_elements(g))
        if (elem_order(g, e) == o) out.push_back(e);
    return out;
}

inline std::vector<SymElement> centralizer(const SymGroup& g, const SymElement& a) {
    std::vector<SymElement> out;
    for (const SymElement& e : all_elements(g))
        if (commutes(g, e, a)) out.push_back(e);
    return out;
}

// True iff some group element conjugates x to y (exhaustive).
inline bool conjugate_exists(const SymGroup& g, const SymElement& x, const SymElement& y) {
    for (const SymElement& u : all_elements(g))
        if (conjugate(g, x, u) == y) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Fixed-point bookkeeping for the two rigidity constructions.

enum class FpConstruction { Thm521, Thm522 };

struct FixedPointRule {
    FpConstruction construction;
    int rho;

    SymGroup group() const {
        if (construction == FpConstruction::Thm522) {
            if (rho < 4 || rho % 4 != 0)
                throw std::invalid_argument("FixedPointRule: Thm522 needs rho == 0 mod 4");
            return SymGroup{SymKind::Dihedral, rho};
        }
        if (rho < 2) throw std::invalid_argument("FixedPointRule: Thm521 needs rho >= 2");
        return SymGroup{SymKind::DihedralTimesC2, rho + 1};
    }
};

// Sentinel for "fixes the whole surface" (the identity element).
inline constexpr int infinite_fixed_points = std::numeric_limits<int>::max();

// Stated fixed-point counts.  For the second construction: reflections R^k S
// fix 6 points (k even) or 2 (k odd); nontrivial rotations fix 2; the
// identity fixes everything.  The first construction's full table is not
// pinned down, so only the identity is answerable there.
inline int fixed_points(const FixedPointRule& rule, const SymElement& x) {
    SymGroup g = rule.group();
    if (x.k < 0 || x.k >= g.n || (x.t && !g.has_t()))
        throw std::invalid_argument("fixed_points: element outside the rule's group");
    if (x == SymElement{}) return infinite_fixed_points;
    if (rule.construction == FpConstruction::Thm521)
        throw std::domain_error("fixed_points: count not specified for this element");
    if (x.s == 1) return (x.k % 2 == 0) ? 6 : 2;
    return 2;
}

// ---------------------------------------------------------------------------
// Structure checks used by the two rigidity recipes.

struct SymCheckReport {
    bool passed = true;
    std::vector<std::string> lines;  // one per check, prefixed PASS/FAIL

    void check(bool ok, const std::string& what) {
        passed = passed && ok;
        lines.push_back(std::string(ok ? "PASS " : "FAIL ") + what);
    }
};

// Recipe for the family Gamma = D_{2(rho+1)} x C_2 acting with rotation part
// of order n = rho + 1:
//   * R and S have different orders (so no automorphism swaps them),
//   * the elements of order n are exactly: R^k with gcd(k,n)=1; plus, when n
//     is even, R^k T with gcd(k,n)=1; plus, when n == 2 mod 4, R^k T with
//     gcd(k, n/2)=1 and k not already counted,
//   * no element of order n commutes with S except through the center —
//     concretely, none of them commutes with S.
inline SymCheckReport verify_thm_5_2_1(int rho) {
    if (rho < 2) throw std::invalid_argument("verify_thm_5_2_1: rho >= 2 required");
    SymGroup g{SymKind::DihedralTimesC2, rho + 1};
    int n = g.n;
    SymCheckReport r;

    SymElement R{1, 0, 0}, S{0, 1, 0};
    r.check(elem_order(g, R) != elem_order(g, S), "order(R) != order(S)");

    std::vector<SymElement> predicted;
    for (int k = 1; k < n; ++k)
        if (std::gcd(k, n) == 1) predicted.push_back(SymElement{k, 0, 0});
    if (n % 2 == 0)
        for (int k = 1; k < n; ++k)
            if (std::gcd(k, n) == 1) predicted.push_back(SymElement{k, 0, 1});
    if (n % 4 == 2)
        for (int k = 0; k < n; ++k)
            if (std::gcd(k, n) != 1 && std::gcd(k, n / 2) == 1)
                predicted.push_back(SymElement{k, 0, 1});
    std::sort(predicted.begin(), predicted.end());
    auto actual = elements_of_order(g, n);
    std::sort(actual.begin(), actual.end());
    r.check(predicted == actual, "elements of order n match the three predicted bullets");

    bool none_commutes = true;
    for (const SymElement& e : actual)
        if (commutes(g, e, S)) none_commutes = false;
    r.check(none_commutes, "no element of order n commutes with S");
    return r;
}

// Recipe for D_{2rho}, rho == 0 mod 4:
//   * S fixes 6 points while RS fixes 2, so they are not conjugate,
//   * the fixed-point rule is conjugation-invariant,
//   * the involutions commuting with RS are exactly RS, R^{(rho-2)/2} S and
//     the central rotation R^{rho/2} — all with 2 fixed points, so no
//     6-fixed-point involution commutes with RS,
//   * (rho-2)/2 is odd, which is what makes the centralizer list collapse
//     onto the 2-fixed-point side.
inline SymCheckReport verify_thm_5_2_2(int rho) {
    if (rho < 4 || rho % 4 != 0)
        throw std::invalid_argument("verify_thm_5_2_2: rho must be a positive multiple of 4");
    SymGroup g{SymKind::Dihedral, rho};
    FixedPointRule rule{FpConstruction::Thm522, rho};
    SymCheckReport r;

    SymElement S{0, 1, 0}, RS{1, 1, 0};
    r.check(fixed_points(rule, S) == 6 && fixed_points(rule, RS) == 2,
            "fixed_points(S) = 6 and fixed_points(R*S) = 2");

    bool invariant = true;
    for (const SymElement& x : all_elements(g))
        for (const SymElement& u : all_elements(g)) {
            if (x == SymElement{}) continue;
            if (fixed_points(rule, conjugate(g, x, u)) != fixed_points(rule, x))
                invariant = false;
        }
    r.check(invariant, "fixed-point rule is conjugation-invariant");

    // The second reflection in the list is R^{(rho+2)/2} S: commuting
    // reflections differ by the central rotation R^{rho/2}, so the exponent
    // is 1 + rho/2 (odd, since rho == 0 mod 4).
    std::vector<SymElement> invs;
    for (const SymElement& e : centralizer(g, RS))
        if (elem_order(g, e) == 2) invs.push_back(e);
    std::sort(invs.begin(), invs.end());
    std::vector<SymElement> want = {RS, SymElement{(rho + 2) / 2, 1, 0}, SymElement{rho / 2, 0, 0}};
    std::sort(want.begin(), want.end());
    r.check(invs == want, "involutions commuting with R*S are {R*S, R^{(rho+2)/2}*S, R^{rho/2}}");

    bool all_two = true;
    for (const SymElement& e : invs)
        if (fixed_points(rule, e) != 2) all_two = false;
    r.check(all_two, "every involution commuting with R*S has 2 fixed points");

    r.check(((rho + 2) / 2) % 2 == 1, "(rho+2)/2 is odd");
    return r;
}

}  // namespace mcg
