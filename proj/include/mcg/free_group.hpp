#pragma once

// Reduced words and endomorphisms of finitely generated free groups.
//
// A word is a flat sequence of nonzero signed generator indices: +i denotes
// the i-th generator (1-based), -i its inverse.  Words are kept freely
// reduced at all times, so equality in the free group is plain sequence
// equality.  Endomorphisms are given by generator images; automorphisms are
// shipped as forward/backward pairs whose compositions are checked to be the
// identity.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

using Letter = int;

class FreeWord {
public:
    FreeWord() = default;

    // Builds a freely reduced word from a raw letter sequence.
    // Throws on zero letters or |index| > rank (rank 0 disables the check).
    static FreeWord reduce(const std::vector<Letter>& raw, int rank = 0) {
        std::vector<Letter> out;
        out.reserve(raw.size());
        for (Letter l : raw) {
            if (l == 0)
                throw std::invalid_argument("FreeWord: zero letter");
            if (rank > 0 && (l > rank || l < -rank))
                throw std::invalid_argument("FreeWord: letter out of range");
            if (!out.empty() && out.back() == -l)
                out.pop_back();
            else
                out.push_back(l);
        }
        FreeWord w;
        w._letters = std::move(out);
        return w;
    }

    const std::vector<Letter>& letters() const { return _letters; }
    std::size_t length() const { return _letters.size(); }
    bool is_identity() const { return _letters.empty(); }

    FreeWord inverse() const {
        std::vector<Letter> inv(_letters.rbegin(), _letters.rend());
        for (Letter& l : inv) l = -l;
        FreeWord w;
        w._letters = std::move(inv);
        return w;
    }

    friend FreeWord operator*(const FreeWord& a, const FreeWord& b) {
        std::vector<Letter> cat = a._letters;
        cat.insert(cat.end(), b._letters.begin(), b._letters.end());
        return reduce(cat);
    }

    friend bool operator==(const FreeWord& a, const FreeWord& b) {
        return a._letters == b._letters;
    }
    friend bool operator!=(const FreeWord& a, const FreeWord& b) {
        return !(a == b);
    }

    // Conjugate u * this * u^-1.
    FreeWord conjugated_by(const FreeWord& u) const {
        return u * (*this) * u.inverse();
    }

    std::string str() const {
        if (_letters.empty()) return "1";
        std::string s;
        for (std::size_t i = 0; i < _letters.size(); ++i) {
            if (i) s += '.';
            Letter l = _letters[i];
            s += (l > 0) ? "x" + std::to_string(l)
                         : "X" + std::to_string(-l);
        }
        return s;
    }

private:
    std::vector<Letter> _letters;  // always freely reduced
};

// Convenience: word from an initializer list (already validated/reduced).
inline FreeWord word(std::initializer_list<Letter> ls) {
    return FreeWord::reduce(std::vector<Letter>(ls));
}

class FreeEndo {
public:
    FreeEndo() : _rank(0) {}

    FreeEndo(int rank, std::vector<FreeWord> images)
        : _rank(rank), _images(std::move(images)) {
        if (static_cast<int>(_images.size()) != rank)
            throw std::invalid_argument("FreeEndo: image count != rank");
        for (const FreeWord& w : _images)
            for (Letter l : w.letters())
                if (l > rank || l < -rank)
                    throw std::invalid_argument("FreeEndo: image letter out of range");
    }

    static FreeEndo identity(int rank) {
        std::vector<FreeWord> im;
        im.reserve(rank);
        for (int i = 1; i <= rank; ++i) im.push_back(word({i}));
        return FreeEndo(rank, std::move(im));
    }

    int rank() const { return _rank; }
    const FreeWord& image(int gen) const {  // gen is 1-based
        return _images.at(static_cast<std::size_t>(gen - 1));
    }
    const std::vector<FreeWord>& images() const { return _images; }

    // Substitutes generator images into w (inverting for negative letters).
    FreeWord apply(const FreeWord& w) const {
        std::vector<Letter> out;
        for (Letter l : w.letters()) {
            const FreeWord& im = image(l > 0 ? l : -l);
            if (l > 0) {
                for (Letter m : im.letters()) {
                    if (!out.empty() && out.back() == -m) out.pop_back();
                    else out.push_back(m);
                }
            } else {
                const auto& ls = im.letters();
                for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
                    Letter m = -*it;
                    if (!out.empty() && out.back() == -m) out.pop_back();
                    else out.push_back(m);
                }
            }
        }
        return FreeWord::reduce(out);
    }

    bool is_identity() const { return *this == identity(_rank); }

    friend bool operator==(const FreeEndo& a, const FreeEndo& b) {
        return a._rank == b._rank && a._images == b._images;
    }
    friend bool operator!=(const FreeEndo& a, const FreeEndo& b) {
        return !(a == b);
    }

private:
    int _rank;
    std::vector<FreeWord> _images;
};

// (e1 o e2): generator g |-> e1(e2(g)).  e2 is applied first.
inline FreeEndo compose(const FreeEndo& e1, const FreeEndo& e2) {
    if (e1.rank() != e2.rank())
        throw std::invalid_argument("compose: rank mismatch");
    std::vector<FreeWord> im;
    im.reserve(static_cast<std::size_t>(e1.rank()));
    for (int g = 1; g <= e2.rank(); ++g) im.push_back(e1.apply(e2.image(g)));
    return FreeEndo(e1.rank(), std::move(im));
}

inline bool equal(const FreeEndo& e1, const FreeEndo& e2) {
    if (e1.rank() != e2.rank())
        throw std::invalid_argument("equal: rank mismatch");
    return e1 == e2;
}

// Column j = exponent-sum vector of the image of generator j.
inline std::vector<std::vector<std::int64_t>> abelianization(const FreeEndo& e) {
    int n = e.rank();
    std::vector<std::vector<std::int64_t>> m(
        static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int j = 1; j <= n; ++j)
        for (Letter l : e.image(j).letters()) {
            int i = (l > 0 ? l : -l) - 1;
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - 1)] += (l > 0 ? 1 : -1);
        }
    return m;
}

// An automorphism shipped with its inverse; the constructor verifies the
// certificate (both composition orders must be the identity).
class CertifiedAuto {
public:
    CertifiedAuto() = default;

    CertifiedAuto(FreeEndo forward, FreeEndo backward)
        : _forward(std::move(forward)), _backward(std::move(backward)) {
        if (!compose(_forward, _backward).is_identity() ||
            !compose(_backward, _forward).is_identity())
            throw std::invalid_argument("CertifiedAuto: inverse certificate fails");
    }

    const FreeEndo& forward() const { return _forward; }
    const FreeEndo& backward() const { return _backward; }

    CertifiedAuto inverse() const { return CertifiedAuto(_backward, _forward); }

private:
    FreeEndo _forward;
    FreeEndo _backward;
};

}  // namespace mcg
