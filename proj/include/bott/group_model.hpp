#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"

namespace bott {

/// Exact dyadic rational num / 2^exp, normalized so that num is odd or the
/// value is 0/1. Closed under addition and negation, which is all the group
/// law needs; no floating point anywhere in this module.
struct Dyadic {
    std::int64_t num = 0;
    int exp = 0;

    static Dyadic make(std::int64_t num, int exp) {
        if (exp < 0) throw std::invalid_argument("negative denominator exponent");
        while (num != 0 && num % 2 == 0 && exp > 0) {
            num /= 2;
            --exp;
        }
        if (num == 0) exp = 0;
        return Dyadic{num, exp};
    }

    static Dyadic from_int(std::int64_t v) { return Dyadic{v, 0}; }

    static Dyadic half() { return Dyadic{1, 1}; }

    [[nodiscard]] bool is_zero() const { return num == 0; }
    [[nodiscard]] bool is_integer() const { return exp == 0; }

    friend Dyadic operator+(Dyadic a, Dyadic b) {
        int e = std::max(a.exp, b.exp);
        std::int64_t n = (a.num << (e - a.exp)) + (b.num << (e - b.exp));
        return make(n, e);
    }

    friend Dyadic operator-(Dyadic a) { return Dyadic{-a.num, a.exp}; }
    friend Dyadic operator-(Dyadic a, Dyadic b) { return a + (-b); }

    friend bool operator==(const Dyadic&, const Dyadic&) = default;
};

[[nodiscard]] inline std::string to_string(Dyadic d) {
    if (d.exp == 0) return std::to_string(d.num);
    return std::to_string(d.num) + "/" + std::to_string(std::int64_t{1} << d.exp);
}

/// Euclidean isometry x -> Dx + t with D diagonal, entries +-1, and t an
/// exact dyadic vector. The diagonal is bit-packed: bit (j-1) of `signs` is
/// set iff D_jj = -1.
struct AffineMap {
    int n = 0;
    std::uint64_t signs = 0;
    std::vector<Dyadic> trans;

    [[nodiscard]] int diag_entry(int j) const {
        if (j < 1 || j > n)
            throw std::out_of_range("index " + std::to_string(j) + " outside 1.." + std::to_string(n));
        return (signs >> (j - 1)) & 1u ? -1 : 1;
    }

    [[nodiscard]] bool is_translation() const { return signs == 0; }

    friend bool operator==(const AffineMap&, const AffineMap&) = default;
};

inline AffineMap identity_map(int n) {
    return AffineMap{n, 0, std::vector<Dyadic>(static_cast<std::size_t>(n))};
}

/// Pure translation by the given dyadic vector.
inline AffineMap translation(std::vector<Dyadic> t) {
    int n = static_cast<int>(t.size());
    return AffineMap{n, 0, std::move(t)};
}

/// Pure translation by the standard basis vector e_i.
inline AffineMap lattice_translation(int n, int i) {
    AffineMap f = identity_map(n);
    if (i < 1 || i > n)
        throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(n));
    f.trans[static_cast<std::size_t>(i - 1)] = Dyadic::from_int(1);
    return f;
}

/// The i-th group generator: linear part has (-1)^{a_{ij}} at position j
/// (so -1 exactly at the 1-entries of row i, all of which sit right of i),
/// translation e_i/2. For i = n the linear part is the identity.
inline AffineMap generator(const BottMatrix& a, int i) {
    if (i < 1 || i > a.n())
        throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(a.n()));
    AffineMap f = identity_map(a.n());
    f.signs = a.row_mask(i);
    f.trans[static_cast<std::size_t>(i - 1)] = Dyadic::half();
    return f;
}

/// Group law (D1,t1)(D2,t2) = (D1 D2, D1 t2 + t1).
inline AffineMap compose(const AffineMap& f, const AffineMap& g) {
    if (f.n != g.n)
        throw std::invalid_argument("dimension mismatch: " + std::to_string(f.n) + " vs " +
                                    std::to_string(g.n));
    AffineMap out = identity_map(f.n);
    out.signs = f.signs ^ g.signs;
    for (int j = 1; j <= f.n; ++j) {
        Dyadic v = g.trans[static_cast<std::size_t>(j - 1)];
        if (f.diag_entry(j) < 0) v = -v;
        out.trans[static_cast<std::size_t>(j - 1)] = v + f.trans[static_cast<std::size_t>(j - 1)];
    }
    return out;
}

/// Inverse of (D,t) is (D,-Dt) since D is its own inverse.
inline AffineMap inverse(const AffineMap& f) {
    AffineMap out = identity_map(f.n);
    out.signs = f.signs;
    for (int j = 1; j <= f.n; ++j) {
        Dyadic v = f.trans[static_cast<std::size_t>(j - 1)];
        if (f.diag_entry(j) < 0) v = -v;
        out.trans[static_cast<std::size_t>(j - 1)] = -v;
    }
    return out;
}

inline AffineMap conjugate(const AffineMap& f, const AffineMap& g) {
    return compose(compose(f, g), inverse(f));
}

/// True iff every squared generator is the pure translation by e_i and all
/// squared generators commute, i.e. the s_i^2 span a copy of the integer
/// lattice inside the group.
inline bool check_lattice(const BottMatrix& a) {
    std::vector<AffineMap> squares;
    squares.reserve(static_cast<std::size_t>(a.n()));
    for (int i = 1; i <= a.n(); ++i) {
        AffineMap s = generator(a, i);
        AffineMap sq = compose(s, s);
        if (sq != lattice_translation(a.n(), i)) return false;
        squares.push_back(std::move(sq));
    }
    for (std::size_t i = 0; i < squares.size(); ++i)
        for (std::size_t j = i + 1; j < squares.size(); ++j)
            if (compose(squares[i], squares[j]) != compose(squares[j], squares[i])) return false;
    return true;
}

/// The group generated by the linear parts of the generators, as sorted
/// bit-packed diagonals. Computed by closure under composition rather than
/// by row reduction, so its order is an independent check against
/// 2^holonomy_rank.
inline std::vector<std::uint64_t> holonomy_image(const BottMatrix& a) {
    std::vector<std::uint64_t> gens;
    for (int i = 1; i <= a.n(); ++i) gens.push_back(a.row_mask(i));

    std::vector<std::uint64_t> seen{0};
    std::vector<std::uint64_t> frontier{0};
    while (!frontier.empty()) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t v : frontier)
            for (std::uint64_t g : gens) {
                std::uint64_t w = v ^ g;
                if (!std::binary_search(seen.begin(), seen.end(), w) &&
                    std::find(next.begin(), next.end(), w) == next.end())
                    next.push_back(w);
            }
        seen.insert(seen.end(), next.begin(), next.end());
        std::sort(seen.begin(), seen.end());
        frontier = std::move(next);
    }
    return seen;
}

/// Log rendering, e.g. "(diag: [1, -1], t: [1/2, 0])".
[[nodiscard]] inline std::string to_string(const AffineMap& f) {
    std::string diag, t;
    for (int j = 1; j <= f.n; ++j) {
        if (j > 1) {
            diag += ", ";
            t += ", ";
        }
        diag += std::to_string(f.diag_entry(j));
        t += to_string(f.trans[static_cast<std::size_t>(j - 1)]);
    }
    return "(diag: [" + diag + "], t: [" + t + "])";
}

}  // namespace bott
