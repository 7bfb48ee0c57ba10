#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"

namespace bott {

/// Square-free monomial over x_1..x_n: bit (i-1) is set iff x_i divides it.
/// The zero mask is the unit monomial 1.
using Monomial = std::uint64_t;

inline constexpr Monomial unit_monomial = 0;

[[nodiscard]] inline int monomial_degree(Monomial m) { return std::popcount(m); }

/// Monomial from a set of generator indices. Duplicates are rejected: an
/// index list with a repeat does not denote a square-free monomial.
inline Monomial monomial_of(const std::vector<int>& indices) {
    Monomial m = 0;
    for (int i : indices) {
        if (i < 1 || i > max_dimension)
            throw std::out_of_range("generator index " + std::to_string(i) + " outside 1.." +
                                    std::to_string(max_dimension));
        Monomial bit = Monomial{1} << (i - 1);
        if (m & bit) throw std::invalid_argument("repeated generator index " + std::to_string(i));
        m |= bit;
    }
    return m;
}

/// Generator indices of m, strictly increasing.
[[nodiscard]] inline std::vector<int> monomial_indices(Monomial m) {
    std::vector<int> out;
    for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
}

/// Canonical total order: by degree, then lexicographically on the
/// increasing index sequences. For distinct equal-degree monomials the one
/// containing the lowest index at which they differ comes first; note this
/// is not the numeric order of the masks.
[[nodiscard]] inline bool monomial_less(Monomial a, Monomial b) {
    int da = std::popcount(a);
    int db = std::popcount(b);
    if (da != db) return da < db;
    if (a == b) return false;
    Monomial diff = a ^ b;
    Monomial low = diff & (~diff + 1);
    return (a & low) != 0;
}

[[nodiscard]] inline std::string to_string(Monomial m) {
    if (m == 0) return "1";
    std::string out;
    for (int i : monomial_indices(m)) {
        if (!out.empty()) out.push_back('*');
        out += "x" + std::to_string(i);
    }
    return out;
}

/// Element of the mod-2 cohomology ring in normal form: a set of square-free
/// monomials, stored sorted in the canonical monomial order with no
/// duplicates (GF(2) coefficients, so a term is present or absent).
class Z2Polynomial {
public:
    Z2Polynomial() = default;

    static Z2Polynomial zero() { return {}; }

    static Z2Polynomial one() { return Z2Polynomial(std::vector<Monomial>{unit_monomial}); }

    static Z2Polynomial variable(int i) {
        return Z2Polynomial(std::vector<Monomial>{monomial_of({i})});
    }

    /// Normalizes an arbitrary term list: sorts and cancels duplicate pairs.
    static Z2Polynomial from_terms(std::vector<Monomial> terms) {
        std::sort(terms.begin(), terms.end(), monomial_less);
        std::vector<Monomial> kept;
        for (std::size_t i = 0; i < terms.size();) {
            std::size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) ++j;
            if ((j - i) % 2 != 0) kept.push_back(terms[i]);
            i = j;
        }
        Z2Polynomial p;
        p.terms_ = std::move(kept);
        return p;
    }

    [[nodiscard]] const std::vector<Monomial>& terms() const { return terms_; }

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }

    [[nodiscard]] bool is_one() const { return terms_.size() == 1 && terms_[0] == unit_monomial; }

    /// True iff every term has degree exactly k (vacuously true for zero).
    [[nodiscard]] bool is_homogeneous(int k) const {
        for (Monomial m : terms_)
            if (monomial_degree(m) != k) return false;
        return true;
    }

    /// Sum of the terms of degree exactly k.
    [[nodiscard]] Z2Polynomial homogeneous_component(int k) const {
        Z2Polynomial out;
        for (Monomial m : terms_)
            if (monomial_degree(m) == k) out.terms_.push_back(m);
        return out;
    }

    friend bool operator==(const Z2Polynomial&, const Z2Polynomial&) = default;

private:
    explicit Z2Polynomial(std::vector<Monomial> sorted_terms) : terms_(std::move(sorted_terms)) {}

    std::vector<Monomial> terms_;
};

/// GF(2) sum: symmetric difference of the term sets.
inline Z2Polynomial add(const Z2Polynomial& p, const Z2Polynomial& q) {
    std::vector<Monomial> out;
    auto a = p.terms().begin(), ae = p.terms().end();
    auto b = q.terms().begin(), be = q.terms().end();
    while (a != ae && b != be) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (monomial_less(*a, *b)) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return Z2Polynomial::from_terms(std::move(out));
}

namespace detail {

/// Appends the normal form of x_i * m to `out` as a list of square-free
/// monomials (possibly with repeats; callers cancel mod 2 afterwards).
///
/// If x_i does not divide m the product is square-free already. Otherwise
/// x_i*m carries the square x_i^2, which the ring relation rewrites to
/// x_i * sum of x_l over column i, so x_i*m = sum over l of x_l*m with
/// every l strictly below i. Recursion terminates because the multiplier
/// index strictly decreases while m stays fixed.
inline void mul_generator(const BottMatrix& a, Monomial m, int i, std::vector<Monomial>& out) {
    Monomial bit = Monomial{1} << (i - 1);
    if ((m & bit) == 0) {
        out.push_back(m | bit);
        return;
    }
    for (std::uint64_t col = a.column_mask(i); col != 0; col &= col - 1)
        mul_generator(a, m, std::countr_zero(col) + 1, out);
}

/// Normal form of s * t for square-free monomials s, t: folds the
/// generators of s into t one at a time, highest index first, cancelling
/// between steps.
inline void mul_monomials(const BottMatrix& a, Monomial s, Monomial t, std::vector<Monomial>& out) {
    std::vector<Monomial> acc{t};
    std::vector<Monomial> next;
    while (s != 0) {
        int i = 64 - std::countl_zero(s);
        s &= ~(Monomial{1} << (i - 1));
        next.clear();
        for (Monomial m : acc) mul_generator(a, m, i, next);
        std::sort(next.begin(), next.end());
        acc.clear();
        for (std::size_t p = 0; p < next.size();) {
            std::size_t q = p;
            while (q < next.size() && next[q] == next[p]) ++q;
            if ((q - p) % 2 != 0) acc.push_back(next[p]);
            p = q;
        }
    }
    out.insert(out.end(), acc.begin(), acc.end());
}

inline void check_in_ring(const Z2Polynomial& p, int n, const char* role) {
    for (Monomial m : p.terms())
        if (n < max_dimension && (m >> n) != 0)
            throw std::invalid_argument(std::string(role) + " uses a generator index above n=" +
                                        std::to_string(n));
}

}  // namespace detail

/// Normal form of x_j^2, i.e. x_j times the linear form read off column j.
/// Column 1 is always empty, so x_1^2 = 0.
inline Z2Polynomial reduce_square(int j, const BottMatrix& a) {
    if (j < 1 || j > a.n())
        throw std::out_of_range("generator index " + std::to_string(j) + " outside 1.." +
                                std::to_string(a.n()));
    std::vector<Monomial> out;
    detail::mul_generator(a, monomial_of({j}), j, out);
    return Z2Polynomial::from_terms(std::move(out));
}

/// Ring product in normal form. Every returned term is square-free; the
/// result of multiplying homogeneous inputs is homogeneous (the relations
/// preserve degree) or zero.
inline Z2Polynomial multiply(const Z2Polynomial& p, const Z2Polynomial& q, const BottMatrix& a) {
    detail::check_in_ring(p, a.n(), "left factor");
    detail::check_in_ring(q, a.n(), "right factor");
    std::vector<Monomial> out;
    for (Monomial s : p.terms())
        for (Monomial t : q.terms()) detail::mul_monomials(a, s, t, out);
    return Z2Polynomial::from_terms(std::move(out));
}

/// All C(n,k) square-free monomials of degree k, in the canonical order
/// (lexicographic on the increasing index sequences).
inline std::vector<Monomial> basis(int n, int k) {
    if (n < 0 || n > max_dimension)
        throw std::invalid_argument("n = " + std::to_string(n) + " outside 0.." +
                                    std::to_string(max_dimension));
    if (k < 0 || k > n)
        throw std::out_of_range("k = " + std::to_string(k) + " outside 0.." + std::to_string(n));
    std::vector<Monomial> out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(monomial_of(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + 1 + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

/// Canonical rendering: terms joined by " + ", "0" for the zero polynomial,
/// "1" for the unit monomial.
[[nodiscard]] inline std::string to_string(const Z2Polynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (Monomial m : p.terms()) {
        if (!out.empty()) out += " + ";
        out += to_string(m);
    }
    return out;
}

}  // namespace bott
