#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <utility>
#include <vector>

#include "bott/bott_matrix.hpp"
#include "bott/cohomology.hpp"
#include "bott/stiefel_whitney.hpp"
#include "bott/sweep.hpp"

namespace bott {

/// {"n": n, "rows": [[cols of row 1], ..., [cols of row n]]}
inline nlohmann::json matrix_to_json(const BottMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 1; i <= a.n(); ++i) rows.push_back(a.row_columns(i));
    return nlohmann::json{{"n", a.n()}, {"rows", std::move(rows)}};
}

inline BottMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("rows"))
        throw std::invalid_argument("matrix JSON must be an object with \"n\" and \"rows\"");
    int n = j.at("n").get<int>();
    const nlohmann::json& rows = j.at("rows");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("\"rows\" must be an array of length n");
    std::vector<std::pair<int, int>> entries;
    for (int i = 1; i <= n; ++i)
        for (const nlohmann::json& col : rows.at(static_cast<std::size_t>(i - 1)))
            entries.emplace_back(i, col.get<int>());
    return BottMatrix(n, entries);
}

/// Sorted list of index lists, one per term; [] is the zero polynomial and
/// [[]] the unit.
inline nlohmann::json polynomial_to_json(const Z2Polynomial& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (Monomial m : p.terms()) terms.push_back(monomial_indices(m));
    return terms;
}

inline Z2Polynomial polynomial_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array of index lists");
    std::vector<Monomial> terms;
    for (const nlohmann::json& term : j) terms.push_back(monomial_of(term.get<std::vector<int>>()));
    return Z2Polynomial::from_terms(std::move(terms));
}

/// {"n": n, "w": [w_0, ..., w_n]}
inline nlohmann::json total_to_json(const TotalSWClass& total) {
    nlohmann::json w = nlohmann::json::array();
    for (const Z2Polynomial& p : total.components) w.push_back(polynomial_to_json(p));
    return nlohmann::json{{"n", total.n}, {"w", std::move(w)}};
}

/// {"n", "k", "lhs", "rhs", "equal", "subsets": [{"indices", "w"}, ...]}
inline nlohmann::json report_to_json(const DecompositionReport& r) {
    nlohmann::json subsets = nlohmann::json::array();
    for (const SubsetTerm& term : r.subsets)
        subsets.push_back({{"indices", term.indices}, {"w", polynomial_to_json(term.w)}});
    return nlohmann::json{{"n", r.n},
                          {"k", r.k},
                          {"lhs", polynomial_to_json(r.lhs)},
                          {"rhs", polynomial_to_json(r.rhs)},
                          {"equal", r.equal},
                          {"subsets", std::move(subsets)}};
}

inline nlohmann::json summary_to_json(const SweepSummary& s) {
    nlohmann::json failures = nlohmann::json::array();
    for (const SweepFailure& f : s.decomposition_failures)
        failures.push_back({{"index", f.index}, {"matrix", matrix_to_json(f.matrix)}, {"k", f.k}});
    return nlohmann::json{{"n", s.n},
                          {"total", s.total},
                          {"orientable", s.orientable},
                          {"decomposition_failures", std::move(failures)},
                          {"w1_mismatches", s.w1_mismatches},
                          {"elapsed_seconds", s.elapsed_seconds}};
}

}  // namespace bott
