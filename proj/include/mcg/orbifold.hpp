#pragma once

// Euler–Poincare and Riemann–Hurwitz bookkeeping for branched coverings of
// surfaces: prong/index identities, covering consistency, pivot detection,
// feasibility tables for periodic maps with many fixed points, and lifting
// exponents of permutation representations.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "free_group.hpp"

namespace mcg {

struct SingularityDatum {
    std::string id;
    int prongs = 2;  // index of the transverse foliation pair at the point
    bool is_puncture = false;
};

struct BranchPoint {
    long long o = 0;  // number of preimages
    long long r = 0;  // ramification order; o * r = sheet count
};

struct CoverDatum {
    long long m = 1;  // sheets
    long long chi_total = 0;
    long long chi_quotient = 0;
    std::vector<BranchPoint> branch;  // honestly-branched points only (r >= 2)

    void validate() const {
        if (m < 1) throw std::invalid_argument("CoverDatum: m must be positive");
        for (const BranchPoint& b : branch) {
            if (b.r < 2) throw std::invalid_argument("CoverDatum: branch r must be >= 2");
            if (b.o < 1 || b.o * b.r != m)
                throw std::invalid_argument("CoverDatum: o*r must equal m");
        }
    }
};

inline long long euler_char(long long genus, long long boundary) {
    if (genus < 0 || boundary < 0) throw std::invalid_argument("euler_char: negative input");
    return 2 - 2 * genus - boundary;
}

// 2*chi = sum over singular points of (2 - prongs), kept in doubled-integer
// form so no rationals appear.
inline bool check_prong_formula(long long chi, const std::vector<SingularityDatum>& sing) {
    long long rhs = 0;
    for (const SingularityDatum& s : sing) {
        if (s.prongs < 1) throw std::invalid_argument("check_prong_formula: prongs must be >= 1");
        rhs += 2 - s.prongs;
    }
    return 2 * chi == rhs;
}

// chi_total + sum(m - o_i) = m * chi_quotient.
inline bool check_riemann_hurwitz(const CoverDatum& c) {
    c.validate();
    long long lhs = c.chi_total;
    for (const BranchPoint& b : c.branch) lhs += c.m - b.o;
    return lhs == c.m * c.chi_quotient;
}

// Index upstairs = index downstairs times the ramification order.
inline long long lift_index(long long ind_down, long long r) {
    if (ind_down < 1 || r < 1) throw std::invalid_argument("lift_index: inputs must be >= 1");
    return ind_down * r;
}

struct PivotPoint {
    long long ind = 2;  // prong count downstairs
    long long r = 1;    // ramification order (1 for regular points)
};

// The candidate is a pivot when it is 1-pronged downstairs and no other
// point (regular points included, with r = 1) lifts to its ramification
// order: ind*r != r_candidate for all others.
inline bool is_pivot(const std::vector<PivotPoint>& points, std::size_t candidate) {
    if (candidate >= points.size()) throw std::invalid_argument("is_pivot: candidate missing");
    const PivotPoint& c = points[candidate];
    if (c.ind != 1) return false;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (i == candidate) continue;
        if (points[i].ind * points[i].r == c.r) return false;
    }
    return true;
}

namespace detail {
// Is `target` a sum of coins m - m/r over divisors r >= 2 of m (with
// repetition)?  Coin DP; target bounded by caller.
inline bool branch_sum_representable(long long m, long long target) {
    if (target == 0) return true;
    if (target < 0) return false;
    std::vector<long long> coins;
    for (long long r = 2; r <= m; ++r)
        if (m % r == 0) coins.push_back(m - m / r);
    std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
    reach[0] = 1;
    for (long long c : coins) {
        if (c <= 0) continue;
        for (long long v = c; v <= target; ++v)
            if (reach[static_cast<std::size_t>(v - c)]) reach[static_cast<std::size_t>(v)] = 1;
    }
    return reach[static_cast<std::size_t>(target)] != 0;
}
}  // namespace detail

// Search bound on the order m when tabulating admissible periodic orders;
// the feasible sets in scope stabilize far below this.
inline constexpr long long admissible_order_cap = 64;

// Orders m for which a closed genus-`genus` surface admits branch data with
// at least q_fixed fully ramified points (one preimage each): exhaustive
// Riemann-Hurwitz search over quotient genus in [0,4] and residual branch
// multisets with orders dividing m.  Orders are scanned up to
// admissible_order_cap.
inline std::set<long long> admissible_orders(long long genus, long long q_fixed) {
    if (genus < 0 || q_fixed < 1) throw std::invalid_argument("admissible_orders: bad input");
    long long chi = 2 - 2 * genus;
    std::set<long long> out;
    out.insert(1);
    for (long long m = 2; m <= admissible_order_cap; ++m)
        for (long long G = 0; G <= 4 && !out.count(m); ++G) {
            long long residual = m * (2 - 2 * G) - chi - q_fixed * (m - 1);
            if (residual >= 0 && detail::branch_sum_representable(m, residual)) out.insert(m);
        }
    return out;
}

// Largest fixed-point count achievable by a nontrivial order-m periodic map
// of the sphere; always 2.
inline long long max_fixed_points_sphere(long long m) {
    if (m < 2) throw std::invalid_argument("max_fixed_points_sphere: m must be >= 2");
    long long best = 0;
    for (long long q = 1; q <= 8; ++q)
        if (admissible_orders(0, q).count(m)) best = q;
    return best;
}

// Divisor pairs (k, s) with k, s >= 2 and k*s = n; empty iff n is 1 or prime.
inline std::vector<std::pair<long long, long long>> cyclic_orbit_factorizations(long long n) {
    if (n < 1) throw std::invalid_argument("cyclic_orbit_factorizations: n must be >= 1");
    std::vector<std::pair<long long, long long>> out;
    for (long long k = 2; k < n; ++k)
        if (n % k == 0 && n / k >= 2) out.emplace_back(k, n / k);
    return out;
}

// ---------------------------------------------------------------------------
// Permutation representations and lifting exponents.

struct Perm {
    std::vector<int> map;  // 0-based images; map[i] = image of point i

    int degree() const { return static_cast<int>(map.size()); }
    static Perm identity(int n) {
        Perm p;
        p.map.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) p.map[static_cast<std::size_t>(i)] = i;
        return p;
    }
    bool valid() const {
        std::vector<char> seen(map.size(), 0);
        for (int v : map) {
            if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)]) return false;
            seen[static_cast<std::size_t>(v)] = 1;
        }
        return true;
    }
    Perm inverse() const {
        Perm q = identity(degree());
        for (int i = 0; i < degree(); ++i)
            q.map[static_cast<std::size_t>(map[static_cast<std::size_t>(i)])] = i;
        return q;
    }
    friend Perm operator*(const Perm& p, const Perm& q) {  // (p*q)(i) = p(q(i))
        Perm r;
        r.map.reserve(q.map.size());
        for (int v : q.map) r.map.push_back(p.map[static_cast<std::size_t>(v)]);
        return r;
    }
    friend bool operator==(const Perm& a, const Perm& b) { return a.map == b.map; }
    friend bool operator!=(const Perm& a, const Perm& b) { return !(a == b); }
};

struct PermRep {
    int degree = 1;
    std::vector<Perm> images;  // one per free generator

    void validate() const {
        if (degree < 1) throw std::invalid_argument("PermRep: degree must be >= 1");
        for (const Perm& p : images)
            if (p.degree() != degree || !p.valid())
                throw std::invalid_argument("PermRep: bad generator permutation");
    }
    int rank() const { return static_cast<int>(images.size()); }

    Perm eval(const FreeWord& w) const {
        Perm acc = Perm::identity(degree);
        for (Letter l : w.letters()) {
            const Perm& g = images.at(static_cast<std::size_t>((l > 0 ? l : -l) - 1));
            acc = acc * (l > 0 ? g : g.inverse());
        }
        return acc;
    }

    bool transitive() const {
        std::vector<char> seen(static_cast<std::size_t>(degree), 0);
        std::vector<int> stack = {0};
        seen[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const Perm& p : images)
                for (int w : {p.map[static_cast<std::size_t>(v)],
                              p.inverse().map[static_cast<std::size_t>(v)]})
                    if (!seen[static_cast<std::size_t>(w)]) {
                        seen[static_cast<std::size_t>(w)] = 1;
                        ++count;
                        stack.push_back(w);
                    }
        }
        return count == degree;
    }
};

// rep after precomposition with phi: generator g -> rep(phi(g)).
inline PermRep precompose(const PermRep& rep, const FreeEndo& phi) {
    if (rep.rank() != phi.rank()) throw std::invalid_argument("precompose: rank mismatch");
    PermRep out;
    out.degree = rep.degree;
    for (int g = 1; g <= phi.rank(); ++g) out.images.push_back(rep.eval(phi.image(g)));
    return out;
}

namespace detail {
// Exhaustive conjugator search; degree capped so the factorial stays small.
inline bool reps_equivalent(const PermRep& a, const PermRep& b) {
    if (a.degree != b.degree || a.rank() != b.rank()) return false;
    if (a.degree > 8)
        throw std::invalid_argument("reps_equivalent: degree cap 8 exceeded");
    std::vector<int> sigma(static_cast<std::size_t>(a.degree));
    for (int i = 0; i < a.degree; ++i) sigma[static_cast<std::size_t>(i)] = i;
    do {
        Perm s;
        s.map = sigma;
        Perm si = s.inverse();
        bool ok = true;
        for (int g = 0; g < a.rank() && ok; ++g)
            if (s * a.images[static_cast<std::size_t>(g)] * si !=
                b.images[static_cast<std::size_t>(g)])
                ok = false;
        if (ok) return true;
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return false;
}
}  // namespace detail

// Least k <= cap with rep∘phi^k equivalent (conjugate) to rep; nullopt if
// none.  Word growth under phi^k is bounded by evaluating incrementally.
inline std::optional<int> lift_exponent(const PermRep& rep, const FreeEndo& phi, int cap) {
    rep.validate();
    if (rep.rank() != phi.rank()) throw std::invalid_argument("lift_exponent: rank mismatch");
    if (cap < 1) throw std::invalid_argument("lift_exponent: cap must be >= 1");
    PermRep cur = rep;
    for (int k = 1; k <= cap; ++k) {
        cur = precompose(cur, phi);
        if (detail::reps_equivalent(cur, rep)) return k;
    }
    return std::nullopt;
}

}  // namespace mcg
