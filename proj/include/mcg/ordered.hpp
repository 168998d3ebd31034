#pragma once

// Bi-invariantly ordered groups and the root-uniqueness consequence: if a
// group carries a total order invariant under multiplication on both sides,
// equal m-th powers force equal elements.  Shipped instances: Z^q with the
// lexicographic order, and a lexicographic extension with ordered quotient
// and central Z^q kernel.

#include <stdexcept>
#include <vector>

namespace mcg {

enum class Ordering { Less, Equal, Greater };

namespace detail {
inline Ordering lex_compare(const std::vector<long long>& x, const std::vector<long long>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("lex_compare: rank mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] < y[i]) return Ordering::Less;
        if (x[i] > y[i]) return Ordering::Greater;
    }
    return Ordering::Equal;
}
}  // namespace detail

// Z^q with lexicographic order (written additively).
struct ZqLex {
    int q;
    using Elem = std::vector<long long>;

    explicit ZqLex(int rank) : q(rank) {
        if (rank < 1) throw std::invalid_argument("ZqLex: rank must be >= 1");
    }
    Elem identity() const { return Elem(static_cast<std::size_t>(q), 0); }
    Elem multiply(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        Elem c = a;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
        return c;
    }
    Elem inverse(const Elem& a) const {
        check(a);
        Elem c = a;
        for (auto& v : c) v = -v;
        return c;
    }
    Elem power(const Elem& a, long long m) const {
        check(a);
        Elem c = a;
        for (auto& v : c) v *= m;
        return c;
    }
    Ordering compare(const Elem& a, const Elem& b) const {
        check(a);
        check(b);
        return detail::lex_compare(a, b);
    }

private:
    void check(const Elem& a) const {
        if (static_cast<int>(a.size()) != q) throw std::invalid_argument("ZqLex: bad element");
    }
};

// Extension 1 -> Z^k -> B -> C -> 1 with C ordered and the kernel central:
// elements are (quotient part, kernel offset) pairs; b1 < b2 when the
// quotient parts compare strictly, with the kernel's lexicographic order as
// tiebreak.  The quotient is itself a ZqLex instance standing in for any
// ordered group.
struct LexExtension {
    ZqLex quotient;
    ZqLex kernel;

    struct Elem {
        std::vector<long long> q_part;
        std::vector<long long> k_part;

        friend bool operator==(const Elem& a, const Elem& b) {
            return a.q_part == b.q_part && a.k_part == b.k_part;
        }
        friend bool operator!=(const Elem& a, const Elem& b) { return !(a == b); }
    };

    LexExtension(int quotient_rank, int kernel_rank)
        : quotient(quotient_rank), kernel(kernel_rank) {}

    Elem identity() const { return Elem{quotient.identity(), kernel.identity()}; }
    Elem multiply(const Elem& a, const Elem& b) const {
        return Elem{quotient.multiply(a.q_part, b.q_part), kernel.multiply(a.k_part, b.k_part)};
    }
    Elem inverse(const Elem& a) const {
        return Elem{quotient.inverse(a.q_part), kernel.inverse(a.k_part)};
    }
    Elem power(const Elem& a, long long m) const {
        return Elem{quotient.power(a.q_part, m), kernel.power(a.k_part, m)};
    }
    Ordering compare(const Elem& a, const Elem& b) const {
        Ordering qc = quotient.compare(a.q_part, b.q_part);
        if (qc != Ordering::Equal) return qc;
        return kernel.compare(a.k_part, b.k_part);
    }
};

// (f^m = g^m) implies (f = g), evaluated concretely; true whenever the
// premise fails.  Always true on bi-ordered groups, which is what the
// property suites confirm on the shipped instances.
template <typename Group>
inline bool unique_root_check(const Group& g, const typename Group::Elem& f,
                              const typename Group::Elem& h, long long m) {
    if (m < 1) throw std::invalid_argument("unique_root_check: m must be >= 1");
    if (!(g.power(f, m) == g.power(h, m))) return true;
    return f == h;
}

}  // namespace mcg
