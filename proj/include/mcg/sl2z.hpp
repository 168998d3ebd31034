#pragma once

// Exact arithmetic in SL2(Z): element orders, trace classification, complete
// m-th-root enumeration via the Cayley-Hamilton trace recurrence, and torsion
// conjugacy labels via binary quadratic forms.  All arithmetic is
// arbitrary-precision; no floating point.

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mcg {

using Int = boost::multiprecision::cpp_int;

struct Sl2 {
    Int a, b, c, d;

    Sl2() : a(1), b(0), c(0), d(1) {}
    Sl2(Int a_, Int b_, Int c_, Int d_)
        : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
        if (a * d - b * c != 1)
            throw std::invalid_argument("Sl2: determinant != 1");
    }

    static Sl2 identity() { return Sl2(); }

    Int trace() const { return a + d; }

    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    bool is_minus_identity() const { return a == -1 && b == 0 && c == 0 && d == -1; }
    bool is_central() const { return is_identity() || is_minus_identity(); }

    Int max_abs_entry() const {
        Int m = abs(a);
        if (abs(b) > m) m = abs(b);
        if (abs(c) > m) m = abs(c);
        if (abs(d) > m) m = abs(d);
        return m;
    }

    Sl2 inverse() const { return Sl2(d, -b, -c, a); }

    friend Sl2 operator*(const Sl2& x, const Sl2& y) {
        return Sl2(x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                   x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d);
    }
    friend Sl2 operator-(const Sl2& x) { return Sl2(-x.a, -x.b, -x.c, -x.d); }

    friend bool operator==(const Sl2& x, const Sl2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Sl2& x, const Sl2& y) { return !(x == y); }

    // total order for canonical set output
    friend bool operator<(const Sl2& x, const Sl2& y) {
        if (x.a != y.a) return x.a < y.a;
        if (x.b != y.b) return x.b < y.b;
        if (x.c != y.c) return x.c < y.c;
        return x.d < y.d;
    }

    std::string str() const {
        return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
    }
};

inline Sl2 pow(Sl2 base, unsigned long e) {
    Sl2 r = Sl2::identity();
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

// ---------------------------------------------------------------------------
// classification

enum class TraceClass { CentralPlus, CentralMinus, Elliptic, Parabolic, Hyperbolic };

inline TraceClass trace_classify(const Sl2& m) {
    if (m.is_identity()) return TraceClass::CentralPlus;
    if (m.is_minus_identity()) return TraceClass::CentralMinus;
    Int t = abs(m.trace());
    if (t <= 1) return TraceClass::Elliptic;
    if (t == 2) return TraceClass::Parabolic;
    return TraceClass::Hyperbolic;
}

inline const char* trace_class_name(TraceClass c) {
    switch (c) {
        case TraceClass::CentralPlus: return "central(+1)";
        case TraceClass::CentralMinus: return "central(-1)";
        case TraceClass::Elliptic: return "elliptic";
        case TraceClass::Parabolic: return "parabolic";
        case TraceClass::Hyperbolic: return "hyperbolic";
    }
    return "?";
}

// Smallest k >= 1 with M^k = I, or nullopt for infinite order.
// Finite orders in SL2(Z) are exactly {1,2,3,4,6}: an element has finite
// order iff it is central or |trace| <= 1.
inline std::optional<int> element_order(const Sl2& m) {
    if (m.is_identity()) return 1;
    if (m.is_minus_identity()) return 2;
    Int t = m.trace();
    if (t == 0) return 4;
    if (t == 1) return 6;
    if (t == -1) return 3;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// torsion conjugacy labels
//
// Representatives are derived from the twist convention
//   tau_a = [[1,1],[0,1]],  tau_b = [[1,0],[-1,1]],
//   alpha = tau_a tau_b,  beta = tau_a tau_b tau_a,  delta = alpha^3 = -I.

enum class TorsionLabel { Id, Delta, Alpha, AlphaInv, AlphaSq, AlphaSqInv, Beta, BetaInv };

inline const char* torsion_label_name(TorsionLabel l) {
    switch (l) {
        case TorsionLabel::Id: return "Id";
        case TorsionLabel::Delta: return "Delta";
        case TorsionLabel::Alpha: return "Alpha";
        case TorsionLabel::AlphaInv: return "AlphaInv";
        case TorsionLabel::AlphaSq: return "AlphaSq";
        case TorsionLabel::AlphaSqInv: return "AlphaSqInv";
        case TorsionLabel::Beta: return "Beta";
        case TorsionLabel::BetaInv: return "BetaInv";
    }
    return "?";
}

inline int torsion_label_order(TorsionLabel l) {
    switch (l) {
        case TorsionLabel::Id: return 1;
        case TorsionLabel::Delta: return 2;
        case TorsionLabel::Alpha:
        case TorsionLabel::AlphaInv: return 6;
        case TorsionLabel::AlphaSq:
        case TorsionLabel::AlphaSqInv: return 3;
        case TorsionLabel::Beta:
        case TorsionLabel::BetaInv: return 4;
    }
    return 0;
}

inline Sl2 twist_a_matrix() { return Sl2(1, 1, 0, 1); }
inline Sl2 twist_b_matrix() { return Sl2(1, 0, -1, 1); }

inline Sl2 torsion_representative(TorsionLabel l) {
    switch (l) {
        case TorsionLabel::Id: return Sl2::identity();
        case TorsionLabel::Delta: return Sl2(-1, 0, 0, -1);
        case TorsionLabel::Alpha: return Sl2(0, 1, -1, 1);        // tau_a tau_b
        case TorsionLabel::AlphaInv: return Sl2(1, -1, 1, 0);
        case TorsionLabel::AlphaSq: return Sl2(-1, 1, -1, 0);
        case TorsionLabel::AlphaSqInv: return Sl2(0, -1, 1, -1);
        case TorsionLabel::Beta: return Sl2(0, 1, -1, 0);         // tau_a tau_b tau_a
        case TorsionLabel::BetaInv: return Sl2(0, -1, 1, 0);
    }
    throw std::logic_error("bad label");
}

inline const std::array<TorsionLabel, 8>& all_torsion_labels() {
    static const std::array<TorsionLabel, 8> ls = {
        TorsionLabel::Id,      TorsionLabel::Delta,     TorsionLabel::Alpha,
        TorsionLabel::AlphaInv, TorsionLabel::AlphaSq,  TorsionLabel::AlphaSqInv,
        TorsionLabel::Beta,    TorsionLabel::BetaInv};
    return ls;
}

// Conjugacy label of a finite-order element.  The sign of the associated
// binary quadratic form Q_M(x,y) = c x^2 + (d-a) xy - b y^2 (definite for
// elliptic M, with sign that of the entry c) is a conjugation invariant that
// separates each elliptic order's two classes; the sign-to-label dictionary
// is fixed by the eight representatives above.
inline TorsionLabel torsion_class(const Sl2& m) {
    std::optional<int> ord = element_order(m);
    if (!ord) throw std::invalid_argument("torsion_class: infinite order");
    switch (*ord) {
        case 1: return TorsionLabel::Id;
        case 2: return TorsionLabel::Delta;
        default: break;
    }
    if (m.c == 0)
        throw std::logic_error("torsion_class: degenerate form on elliptic element");
    bool neg = m.c < 0;  // negative definite <-> same class as alpha-side reps
    switch (*ord) {
        case 6: return neg ? TorsionLabel::Alpha : TorsionLabel::AlphaInv;
        case 3: return neg ? TorsionLabel::AlphaSq : TorsionLabel::AlphaSqInv;
        case 4: return neg ? TorsionLabel::Beta : TorsionLabel::BetaInv;
    }
    throw std::logic_error("torsion_class: unreachable");
}

// ---------------------------------------------------------------------------
// trace recurrence and root enumeration

// p_0 = 0, p_1 = 1, p_{k+1}(t) = t p_k(t) - p_{k-1}(t); for any R in SL2 with
// trace t:  R^m = p_m(t) R - p_{m-1}(t) I.
// Polynomials are coefficient vectors, ascending degree.
inline std::pair<std::vector<Int>, std::vector<Int>> trace_polynomials(int m) {
    if (m < 1) throw std::invalid_argument("trace_polynomials: m < 1");
    std::vector<Int> prev = {};     // p_0 = 0
    std::vector<Int> cur = {Int(1)};  // p_1 = 1
    for (int k = 1; k < m; ++k) {
        // next = t*cur - prev
        std::vector<Int> next(cur.size() + 1, Int(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        while (!next.empty() && next.back() == 0) next.pop_back();
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {prev, cur};
}

inline Int eval_poly(const std::vector<Int>& p, const Int& t) {
    Int v = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * t + *it;
    return v;
}

struct RootSet {
    enum class Kind { Finite, TorsionFamily } kind;
    std::vector<Sl2> roots;                // Kind::Finite, sorted, size <= 2
    std::vector<TorsionLabel> family;      // Kind::TorsionFamily, representatives
};

// All integer solutions t of q_m(t) = t p_m(t) - 2 p_{m-1}(t) = target.
// q_m is monic of degree m; for |t| >= 2 it is monotone in |t|, so the scan
// below covers the Cauchy bound 1 + max|coefficient| without walking it.
inline std::vector<Int> solve_trace_equation(int m, const Int& target) {
    auto [pm1, pm] = trace_polynomials(m);
    // q_m coefficients: t*p_m - 2*p_{m-1}
    std::vector<Int> q(pm.size() + 1, Int(0));
    for (std::size_t i = 0; i < pm.size(); ++i) q[i + 1] = pm[i];
    for (std::size_t i = 0; i < pm1.size(); ++i) q[i] -= 2 * pm1[i];
    std::vector<Int> roots;
    auto check = [&](const Int& t) {
        if (eval_poly(q, t) == target) roots.push_back(t);
    };
    check(Int(0));
    check(Int(1));
    check(Int(-1));
    // |q_m(t)| = |t^m - ...| grows monotonically for |t| >= 2 (all
    // eigenvalue pairs real with |lambda| >= 1), so stop once both tails
    // exceed |target|.
    for (Int t = 2;; ++t) {
        Int vp = eval_poly(q, t);
        Int vn = eval_poly(q, -t);
        if (vp == target) roots.push_back(t);
        if (vn == target) roots.push_back(-t);
        if (abs(vp) > abs(target) && abs(vn) > abs(target)) break;
    }
    return roots;
}

// Complete m-th-root enumeration.  Non-central M: exact finite set (any root
// commutes with M, hence lies in the span of {I, M}; the trace equation
// q_m(t) = tr M captures all candidates).  Central M: representatives of the
// torsion families whose m-th power is M.
inline RootSet mth_roots(const Sl2& m_mat, int m) {
    if (m < 1) throw std::invalid_argument("mth_roots: m < 1");
    RootSet rs;
    if (m_mat.is_central()) {
        rs.kind = RootSet::Kind::TorsionFamily;
        for (TorsionLabel l : all_torsion_labels())
            if (pow(torsion_representative(l), static_cast<unsigned long>(m)) == m_mat)
                rs.family.push_back(l);
        return rs;
    }
    rs.kind = RootSet::Kind::Finite;
    auto [pm1_poly, pm_poly] = trace_polynomials(m);
    for (const Int& t : solve_trace_equation(m, m_mat.trace())) {
        Int pm = eval_poly(pm_poly, t);
        Int pm1 = eval_poly(pm1_poly, t);
        if (pm == 0) continue;  // R^m would be central, but M is not
        // R = (M + p_{m-1}(t) I) / p_m(t), integrality required
        Int ra = m_mat.a + pm1, rb = m_mat.b, rc = m_mat.c, rd = m_mat.d + pm1;
        if (ra % pm != 0 || rb % pm != 0 || rc % pm != 0 || rd % pm != 0) continue;
        ra /= pm; rb /= pm; rc /= pm; rd /= pm;
        if (ra * rd - rb * rc != 1) continue;
        Sl2 r(ra, rb, rc, rd);
        if (pow(r, static_cast<unsigned long>(m)) == m_mat) rs.roots.push_back(r);
    }
    std::sort(rs.roots.begin(), rs.roots.end());
    rs.roots.erase(std::unique(rs.roots.begin(), rs.roots.end()), rs.roots.end());
    return rs;
}

// Independent oracle: exhaustive search over all R with max|entry| <= bound.
// The (a,b,c) loops solve d from the determinant, so cost is (2*bound+1)^3.
// Powers are taken in int64; the (bound, m) combination is rejected unless
// the worst-case entry magnitude (2*bound)^m provably fits.
inline std::vector<Sl2> brute_force_roots(const Sl2& m_mat, int m, long long bound) {
    if (bound < 1) throw std::invalid_argument("brute_force_roots: bound < 1");
    if (m < 1) throw std::invalid_argument("brute_force_roots: m < 1");
    if (boost::multiprecision::pow(Int(2 * bound), static_cast<unsigned>(m)) >
        Int("2000000000000000000"))
        throw std::invalid_argument("brute_force_roots: bound/m combination exceeds int64 safety");
    // reject targets whose entries a power of an in-bound matrix cannot reach
    std::array<long long, 4> tgt;
    {
        const Int lim = Int(4) * boost::multiprecision::pow(Int(2 * bound), unsigned(m)) + 1;
        if (m_mat.max_abs_entry() > lim) return {};
        tgt = {static_cast<long long>(m_mat.a), static_cast<long long>(m_mat.b),
               static_cast<long long>(m_mat.c), static_cast<long long>(m_mat.d)};
    }
    std::vector<Sl2> out;
    auto try_candidate = [&](long long a, long long b, long long c, long long d) {
        long long ra = a, rb = b, rc = c, rd = d;
        for (int k = 1; k < m; ++k) {
            long long na = ra * a + rb * c, nb = ra * b + rb * d;
            long long nc = rc * a + rd * c, nd = rc * b + rd * d;
            ra = na; rb = nb; rc = nc; rd = nd;
        }
        if (ra == tgt[0] && rb == tgt[1] && rc == tgt[2] && rd == tgt[3])
            out.emplace_back(Int(a), Int(b), Int(c), Int(d));
    };
    for (long long a = -bound; a <= bound; ++a)
        for (long long b = -bound; b <= bound; ++b)
            for (long long c = -bound; c <= bound; ++c) {
                if (a == 0) {
                    // -bc = 1
                    if (b * c != -1) continue;
                    for (long long d = -bound; d <= bound; ++d) try_candidate(a, b, c, d);
                } else {
                    long long num = 1 + b * c;
                    if (num % a != 0) continue;
                    long long d = num / a;
                    if (d < -bound || d > bound) continue;
                    try_candidate(a, b, c, d);
                }
            }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace mcg
