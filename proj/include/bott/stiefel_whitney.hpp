#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology.hpp"

namespace bott {

/// Graded vector (w_0, ..., w_n) of homogeneous polynomials; w_0 = 1 and
/// every term of w_k has degree exactly k.
struct TotalSWClass {
    int n = 0;
    std::vector<Z2Polynomial> components;

    [[nodiscard]] const Z2Polynomial& w(int k) const {
        if (k < 0 || k > n)
            throw std::out_of_range("degree " + std::to_string(k) + " outside 0.." + std::to_string(n));
        return components[static_cast<std::size_t>(k)];
    }
};

/// First Stiefel-Whitney class of the i-th line bundle: the linear form
/// given by column i of the matrix. Column 1 is empty, so y_1 = 0.
inline Z2Polynomial line_class(const BottMatrix& a, int i) {
    if (i < 1 || i > a.n())
        throw std::out_of_range("index " + std::to_string(i) + " outside 1.." + std::to_string(a.n()));
    std::vector<Monomial> terms;
    for (std::uint64_t col = a.column_mask(i); col != 0; col &= col - 1)
        terms.push_back(Monomial{1} << std::countr_zero(col));
    return Z2Polynomial::from_terms(std::move(terms));
}

/// Total Stiefel-Whitney class: the normal form of the product of (1 + y_j)
/// over j = 1..n, reduced after each factor and split by degree. The
/// degree-k component equals the k-th elementary symmetric function of the
/// y_j evaluated in the ring.
inline TotalSWClass total_sw(const BottMatrix& a) {
    Z2Polynomial p = Z2Polynomial::one();
    for (int j = 1; j <= a.n(); ++j) {
        Z2Polynomial y = line_class(a, j);
        if (!y.is_zero()) p = add(p, multiply(p, y, a));
    }
    TotalSWClass total;
    total.n = a.n();
    total.components.reserve(static_cast<std::size_t>(a.n()) + 1);
    for (int k = 0; k <= a.n(); ++k) total.components.push_back(p.homogeneous_component(k));
    return total;
}

/// The k-th Stiefel-Whitney class. Degrees above n are zero.
inline Z2Polynomial sw_class(const BottMatrix& a, int k) {
    if (k < 0) throw std::out_of_range("degree " + std::to_string(k) + " is negative");
    if (k > a.n()) return Z2Polynomial::zero();
    return total_sw(a).w(k);
}

/// Independent oracle for sw_class: expands the elementary symmetric
/// function as the GF(2) sum over all k-subsets T of the reduced product of
/// y_j for j in T. Exponential in n; kept definitionally transparent on
/// purpose, use sw_class for real work.
inline Z2Polynomial sw_class_naive(const BottMatrix& a, int k) {
    if (k < 0) throw std::out_of_range("degree " + std::to_string(k) + " is negative");
    if (k > a.n()) return Z2Polynomial::zero();
    std::vector<Z2Polynomial> y;
    y.reserve(static_cast<std::size_t>(a.n()));
    for (int j = 1; j <= a.n(); ++j) y.push_back(line_class(a, j));

    std::vector<Monomial> acc;
    for (Monomial subset : basis(a.n(), k)) {
        Z2Polynomial prod = Z2Polynomial::one();
        for (int j : monomial_indices(subset)) {
            prod = multiply(prod, y[static_cast<std::size_t>(j - 1)], a);
            if (prod.is_zero()) break;
        }
        acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    return Z2Polynomial::from_terms(std::move(acc));
}

/// w_1 read directly off the matrix: the sum of x_i over rows i with odd
/// row sum. Zero exactly when the manifold is orientable.
inline Z2Polynomial w1_from_rows(const BottMatrix& a) {
    std::vector<Monomial> terms;
    for (int i = 1; i <= a.n(); ++i)
        if (std::popcount(a.row_mask(i)) % 2 != 0) terms.push_back(Monomial{1} << (i - 1));
    return Z2Polynomial::from_terms(std::move(terms));
}

/// Contribution of one 2k-subset of rows: the class of the submatrix that
/// keeps exactly those rows.
struct SubsetTerm {
    std::vector<int> indices;
    Z2Polynomial w;
};

/// Both sides of the even-degree decomposition identity
/// w_{2k}(A) = sum over all 2k-subsets S of w_{2k}(A_S).
///
/// Each subset class lives a priori in its own quotient ring; all of them
/// are expressed in the shared square-free monomial basis before summing,
/// which is what makes the GF(2) sum on the right-hand side meaningful.
struct DecompositionReport {
    int n = 0;
    int k = 0;
    Z2Polynomial lhs;
    Z2Polynomial rhs;
    std::vector<SubsetTerm> subsets;
    bool equal = false;
};

/// Evaluates both sides of the identity in degree 2k. Subsets are listed in
/// lexicographic order. For 2k > n the subset collection is empty and the
/// sum is 0, matching sw_class(a, 2k).
inline DecompositionReport decomposition_sum(const BottMatrix& a, int k) {
    if (k < 1) throw std::out_of_range("k = " + std::to_string(k) + " must be positive");
    DecompositionReport report;
    report.n = a.n();
    report.k = k;
    report.lhs = sw_class(a, 2 * k);
    if (2 * k <= a.n()) {
        for (Monomial subset : basis(a.n(), 2 * k)) {
            SubsetTerm term;
            term.indices = monomial_indices(subset);
            term.w = sw_class(row_submatrix(a, term.indices), 2 * k);
            report.rhs = add(report.rhs, term.w);
            report.subsets.push_back(std::move(term));
        }
    }
    report.equal = report.lhs == report.rhs;
    return report;
}

/// One report per even degree 2k with 2 <= 2k <= n.
inline std::vector<DecompositionReport> verify_decomposition(const BottMatrix& a) {
    std::vector<DecompositionReport> reports;
    for (int k = 1; 2 * k <= a.n(); ++k) reports.push_back(decomposition_sum(a, k));
    return reports;
}

/// Even degrees 2k whose reports disagree; empty means verified.
inline std::vector<int> failing_degrees(const std::vector<DecompositionReport>& reports) {
    std::vector<int> out;
    for (const DecompositionReport& r : reports)
        if (!r.equal) out.push_back(2 * r.k);
    return out;
}

/// Human-readable report. Only subsets contained in the support of `a` can
/// contribute (rows outside the support are zero, and a 2k-subset with a
/// zero row cannot reach degree 2k), so those are printed individually,
/// zero or not, and the remaining guaranteed-zero subsets are summarized
/// as a count. Any subset with a nonzero class is always printed.
inline std::string render_report(const BottMatrix& a, const DecompositionReport& r) {
    std::string label = "w" + std::to_string(2 * r.k);
    std::string out = label + " = " + to_string(r.lhs) + "\n";
    std::uint64_t support_mask = 0;
    for (int i : support(a)) support_mask |= Monomial{1} << (i - 1);
    std::size_t hidden = 0;
    for (const SubsetTerm& term : r.subsets) {
        Monomial mask = monomial_of(term.indices);
        if ((mask & ~support_mask) != 0 && term.w.is_zero()) {
            ++hidden;
            continue;
        }
        std::string idx;
        for (int i : term.indices) {
            if (!idx.empty()) idx.push_back(',');
            idx += std::to_string(i);
        }
        out += "  " + label + "[" + idx + "] = " + to_string(term.w) + "\n";
    }
    if (hidden > 0)
        out += "  " + std::to_string(hidden) + (hidden == 1 ? " more subset" : " more subsets") +
               ", each contributing 0\n";
    out += "sum = " + to_string(r.rhs) + "\n";
    out += "equal: ";
    out += r.equal ? "yes" : "no";
    out += "\n";
    return out;
}

/// All components of the total class merged into one inhomogeneous
/// polynomial, for single-line rendering.
inline Z2Polynomial total_polynomial(const TotalSWClass& total) {
    Z2Polynomial sum;
    for (const Z2Polynomial& w : total.components) sum = add(sum, w);
    return sum;
}

}  // namespace bott
