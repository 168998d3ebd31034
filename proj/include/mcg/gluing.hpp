#pragma once

// Annulus-boundary arc gluings: the outer circle of an annulus is cut into
// n equal arcs and glued in orientation-reversing pairs; the result is a
// surface with one boundary (the inner circle) that deformation-retracts
// onto the quotient graph of the outer circle.  A rotation that descends to
// the quotient induces an exact integer matrix on H1 of that graph.

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "sl2z.hpp"  // for Int

namespace mcg {

struct GluingPattern {
    int n_arcs = 0;                 // even, arcs indexed 0..n-1 anticlockwise
    std::vector<int> pairing;       // fixed-point-free involution
    int rotation_shift = 0;         // mod n_arcs

    bool pairing_valid() const {
        int n = n_arcs;
        if (n <= 0 || n % 2 != 0 || static_cast<int>(pairing.size()) != n) return false;
        for (int i = 0; i < n; ++i) {
            int p = pairing[static_cast<std::size_t>(i)];
            if (p < 0 || p >= n || p == i) return false;
            if (pairing[static_cast<std::size_t>(p)] != i) return false;
        }
        return true;
    }

    // the rotation descends iff it maps glued pairs to glued pairs
    bool rotation_descends() const {
        if (!pairing_valid()) return false;
        int n = n_arcs, s = ((rotation_shift % n) + n) % n;
        for (int i = 0; i < n; ++i)
            if (pairing[static_cast<std::size_t>((i + s) % n)] !=
                (pairing[static_cast<std::size_t>(i)] + s) % n)
                return false;
        return true;
    }
};

// The rotation-by-half-turn gluing: pairing(i) = i + 2*rho mod 4*rho.
inline GluingPattern f_pattern(int rho) {
    if (rho < 2) throw std::invalid_argument("f_pattern: rho < 2");
    GluingPattern p;
    p.n_arcs = 4 * rho;
    p.pairing.resize(static_cast<std::size_t>(p.n_arcs));
    for (int i = 0; i < p.n_arcs; ++i)
        p.pairing[static_cast<std::size_t>(i)] = (i + 2 * rho) % (4 * rho);
    p.rotation_shift = 2 * rho;
    return p;
}

// The variant with two crossed blocks: a-type pairs i <-> i+2*rho for the
// 2(2*rho-4) a-arc indices, plus b-pairs {2j*rho-4, 2j*rho-2} and c-pairs
// {2j*rho-3, 2j*rho-1} for j in {1,2} (0-based indices).  Degenerates
// gracefully at rho = 2 (no a-arcs).
inline GluingPattern g_pattern(int rho) {
    if (rho < 2) throw std::invalid_argument("g_pattern: rho < 2");
    GluingPattern p;
    p.n_arcs = 4 * rho;
    p.pairing.assign(static_cast<std::size_t>(p.n_arcs), -1);
    auto pair_up = [&p](int i, int j) {
        p.pairing[static_cast<std::size_t>(i)] = j;
        p.pairing[static_cast<std::size_t>(j)] = i;
    };
    for (int j = 1; j <= 2; ++j) {
        pair_up(2 * j * rho - 4, 2 * j * rho - 2);  // b-pair
        pair_up(2 * j * rho - 3, 2 * j * rho - 1);  // c-pair
    }
    for (int i = 0; i < p.n_arcs; ++i)
        if (p.pairing[static_cast<std::size_t>(i)] == -1)
            pair_up(i, i + 2 * rho);  // a-pairs (first half indices unpaired so far)
    p.rotation_shift = 2 * rho;
    return p;
}

struct QuotientSurfaceReport {
    int vertex_classes = 0;
    int edges = 0;
    int genus = 0;
    int boundary_count = 1;
    int h1_rank = 0;
};

namespace detail {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int x, int y) { parent[static_cast<std::size_t>(find(x))] = find(y); }
};
}  // namespace detail

// Vertex k on the outer circle is the common endpoint of arcs k-1 and k.
// The gluing is orientation-reversing: endpoint k of arc i matches the
// opposite endpoint of arc pairing(i), i.e. vertex i ~ pairing(i)+1 and
// vertex i+1 ~ pairing(i).
inline detail::UnionFind vertex_classes_of(const GluingPattern& p) {
    int n = p.n_arcs;
    detail::UnionFind uf(n);
    for (int i = 0; i < n; ++i) {
        int j = p.pairing[static_cast<std::size_t>(i)];
        uf.unite(i, (j + 1) % n);
        uf.unite((i + 1) % n, j);
    }
    return uf;
}

inline QuotientSurfaceReport analyze(const GluingPattern& p) {
    if (!p.pairing_valid())
        throw std::invalid_argument("analyze: invalid gluing pattern");
    int n = p.n_arcs;
    auto uf = vertex_classes_of(p);
    int v = 0;
    for (int i = 0; i < n; ++i)
        if (uf.find(i) == i) ++v;
    QuotientSurfaceReport r;
    r.vertex_classes = v;
    r.edges = n / 2;
    r.h1_rank = r.edges - v + 1;
    r.boundary_count = 1;  // the inner circle is untouched
    // 2 - 2g - b = chi(graph) = V - E
    int chi = v - r.edges;
    int twice_genus = 2 - r.boundary_count - chi;
    if (twice_genus < 0 || twice_genus % 2 != 0)
        throw std::logic_error("analyze: non-orientable bookkeeping (unexpected)");
    r.genus = twice_genus / 2;
    return r;
}

// Matrix of the rotation's action on H1 of the quotient graph, on the basis
// of fundamental cycles of the non-tree edges.  Each glued pair is one edge,
// oriented along its smaller (anticlockwise) arc index; the partner arc
// carries the opposite orientation.  Entries are in {-1,0,1} for the shipped
// patterns (signed permutation when the graph has a single vertex).
inline std::vector<std::vector<Int>> induced_h1(const GluingPattern& p) {
    if (!p.rotation_descends())
        throw std::invalid_argument("induced_h1: rotation does not descend");
    int n = p.n_arcs, s = ((p.rotation_shift % n) + n) % n;
    auto uf = vertex_classes_of(p);

    // edges: representative arc = smaller index of the pair
    std::vector<int> edge_of_arc(static_cast<std::size_t>(n), -1), rep;
    for (int i = 0; i < n; ++i)
        if (i < p.pairing[static_cast<std::size_t>(i)]) {
            edge_of_arc[static_cast<std::size_t>(i)] = static_cast<int>(rep.size());
            rep.push_back(i);
        }
    int ne = static_cast<int>(rep.size());
    auto signed_edge = [&](int arc) {  // arc with anticlockwise orientation
        int partner = p.pairing[static_cast<std::size_t>(arc)];
        if (arc < partner) return std::pair<int, int>(edge_of_arc[static_cast<std::size_t>(arc)], +1);
        return std::pair<int, int>(edge_of_arc[static_cast<std::size_t>(partner)], -1);
    };

    // spanning tree over vertex classes; parent pointers by BFS on edges
    std::vector<int> vclass(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vclass[static_cast<std::size_t>(i)] = uf.find(i);
    // edge e (rep arc i): tail class(i), head class(i+1)
    auto tail = [&](int e) { return vclass[static_cast<std::size_t>(rep[static_cast<std::size_t>(e)])]; };
    auto head = [&](int e) {
        return vclass[static_cast<std::size_t>((rep[static_cast<std::size_t>(e)] + 1) % n)];
    };
    std::vector<int> parent_edge(static_cast<std::size_t>(n), -1);  // by vertex class id
    std::vector<int> parent_dir(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<bool> is_tree(static_cast<std::size_t>(ne), false);
    std::vector<int> order;
    int root = vclass[0];
    seen[static_cast<std::size_t>(root)] = true;
    order.push_back(root);
    for (std::size_t qi = 0; qi < order.size(); ++qi) {
        int vtx = order[qi];
        for (int e = 0; e < ne; ++e) {
            if (is_tree[static_cast<std::size_t>(e)]) continue;
            int t = tail(e), h = head(e);
            int other = -1, dir = 0;
            if (t == vtx && !seen[static_cast<std::size_t>(h)]) { other = h; dir = +1; }
            else if (h == vtx && !seen[static_cast<std::size_t>(t)]) { other = t; dir = -1; }
            if (other >= 0) {
                is_tree[static_cast<std::size_t>(e)] = true;
                seen[static_cast<std::size_t>(other)] = true;
                parent_edge[static_cast<std::size_t>(other)] = e;
                parent_dir[static_cast<std::size_t>(other)] = dir;  // +1: tree edge points root->other
                order.push_back(other);
            }
        }
    }

    // r(edge): H1 coordinates of "edge + tree path back" (zero on tree edges)
    std::vector<int> h1_index(static_cast<std::size_t>(ne), -1);
    int h1_dim = 0;
    for (int e = 0; e < ne; ++e)
        if (!is_tree[static_cast<std::size_t>(e)]) h1_index[static_cast<std::size_t>(e)] = h1_dim++;

    std::vector<std::vector<Int>> mat(static_cast<std::size_t>(h1_dim),
                                      std::vector<Int>(static_cast<std::size_t>(h1_dim), Int(0)));
    // depth for tree-path computation
    std::vector<int> depth(static_cast<std::size_t>(n), 0);
    for (std::size_t qi = 1; qi < order.size(); ++qi) {
        int vtx = order[qi];
        int e = parent_edge[static_cast<std::size_t>(vtx)];
        int up = (parent_dir[static_cast<std::size_t>(vtx)] > 0) ? tail(e) : head(e);
        depth[static_cast<std::size_t>(vtx)] = depth[static_cast<std::size_t>(up)] + 1;
    }
    // image of a single arc (anticlockwise) under the rotation, as a chain;
    // project the image chain of each fundamental cycle onto the H1 basis.
    // Tree edges project to zero only up to boundaries, which is exactly
    // right for closed chains (cycles); every c_k image is a closed chain.
    for (int e = 0; e < ne; ++e) {
        int k = h1_index[static_cast<std::size_t>(e)];
        if (k < 0) continue;
        // fundamental cycle c_k = e + (tree path head(e) -> tail(e)).
        // Its image under the rotation is the rotated edge plus the image of
        // the tree path; projecting with r kills tree edges and, because the
        // image is a closed chain, the projection is class-correct.
        // r(image(c_k)) = sum over chain edges of sign * r(image(edge)).
        // Tree-path edges' images also contribute.
        std::vector<std::pair<int, int>> chain;  // (edge, sign) of c_k
        chain.emplace_back(e, +1);
        int x = head(e), y = tail(e);
        // path x -> root and y -> root; c_k = e + path(head->tail)
        std::vector<std::pair<int, int>> up_x, up_y;
        int cx = x, cy = y;
        while (depth[static_cast<std::size_t>(cx)] > depth[static_cast<std::size_t>(cy)]) {
            int pe = parent_edge[static_cast<std::size_t>(cx)];
            up_x.emplace_back(pe, -parent_dir[static_cast<std::size_t>(cx)]);
            cx = (parent_dir[static_cast<std::size_t>(cx)] > 0) ? tail(pe) : head(pe);
        }
        while (depth[static_cast<std::size_t>(cy)] > depth[static_cast<std::size_t>(cx)]) {
            int pe = parent_edge[static_cast<std::size_t>(cy)];
            up_y.emplace_back(pe, -parent_dir[static_cast<std::size_t>(cy)]);
            cy = (parent_dir[static_cast<std::size_t>(cy)] > 0) ? tail(pe) : head(pe);
        }
        while (cx != cy) {
            int pe = parent_edge[static_cast<std::size_t>(cx)];
            up_x.emplace_back(pe, -parent_dir[static_cast<std::size_t>(cx)]);
            cx = (parent_dir[static_cast<std::size_t>(cx)] > 0) ? tail(pe) : head(pe);
            pe = parent_edge[static_cast<std::size_t>(cy)];
            up_y.emplace_back(pe, -parent_dir[static_cast<std::size_t>(cy)]);
            cy = (parent_dir[static_cast<std::size_t>(cy)] > 0) ? tail(pe) : head(pe);
        }
        // path head -> tail = up_x (descending signs as recorded) then
        // reverse of up_y with flipped signs
        for (auto [pe, sg] : up_x) chain.emplace_back(pe, sg);
        for (auto it = up_y.rbegin(); it != up_y.rend(); ++it)
            chain.emplace_back(it->first, -it->second);

        // rotate the chain and project
        for (auto [ce, csg] : chain) {
            int arc = rep[static_cast<std::size_t>(ce)];
            int rot = (arc + s) % n;
            auto [ie, isg] = signed_edge(rot);
            int col = k, row = h1_index[static_cast<std::size_t>(ie)];
            if (row >= 0)
                mat[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] += csg * isg;
        }
    }
    return mat;
}

// ---------------------------------------------------------------------------
// exact characteristic polynomial

struct IntPolynomial {
    std::vector<Int> coeffs;  // ascending degree; empty = zero polynomial

    void normalize() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs == b.coeffs;
    }
    friend bool operator!=(const IntPolynomial& a, const IntPolynomial& b) { return !(a == b); }

    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
        IntPolynomial r;
        if (a.coeffs.empty() || b.coeffs.empty()) return r;
        r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs.size(); ++j)
                r.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
        return r;
    }

    static IntPolynomial from(std::vector<Int> cs) {
        IntPolynomial p;
        p.coeffs = std::move(cs);
        p.normalize();
        return p;
    }

    // (x + c)^e
    static IntPolynomial linear_power(const Int& c, int e) {
        IntPolynomial r = from({Int(1)});
        IntPolynomial lin = from({c, Int(1)});
        for (int i = 0; i < e; ++i) r = r * lin;
        return r;
    }

    std::string str() const {
        if (coeffs.empty()) return "0";
        std::string s;
        for (int d = degree(); d >= 0; --d) {
            const Int& c = coeffs[static_cast<std::size_t>(d)];
            if (c == 0) continue;
            if (!s.empty()) s += (c > 0) ? " + " : " - ";
            else if (c < 0) s += "-";
            Int ac = abs(c);
            bool show_c = (ac != 1 || d == 0);
            if (show_c) s += ac.str();
            if (d > 0) {
                if (show_c) s += "*";
                s += "x";
                if (d > 1) s += "^" + std::to_string(d);
            }
        }
        return s;
    }
};

// det(xI - M) via the Faddeev-LeVerrier recurrence (all divisions exact).
inline IntPolynomial char_poly(const std::vector<std::vector<Int>>& m) {
    std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("char_poly: non-square");
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    // N_1 = M; c_{n-k} = -tr(M N_k)/k ... with N_{k+1} = M(N_k + c_{n-k} I)
    std::vector<std::vector<Int>> nk(n, std::vector<Int>(n, Int(0)));
    for (std::size_t i = 0; i < n; ++i) nk[i][i] = 1;
    for (std::size_t k = 1; k <= n; ++k) {
        // nk = M * nk_prev (nk starts as I, so first product is M)
        std::vector<std::vector<Int>> mn(n, std::vector<Int>(n, Int(0)));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t l = 0; l < n; ++l)
                if (m[i][l] != 0)
                    for (std::size_t j = 0; j < n; ++j) mn[i][j] += m[i][l] * nk[l][j];
        Int tr = 0;
        for (std::size_t i = 0; i < n; ++i) tr += mn[i][i];
        Int ck = -tr / Int(static_cast<long long>(k));  // exact
        c[n - k] = ck;
        for (std::size_t i = 0; i < n; ++i) mn[i][i] += ck;
        nk = std::move(mn);
    }
    return IntPolynomial::from(std::move(c));
}

inline bool conjugacy_obstruction(const IntPolynomial& p1, const IntPolynomial& p2) {
    return p1 != p2;
}

}  // namespace mcg
