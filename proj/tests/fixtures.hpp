#pragma once

#include <bit>
#include <random>
#include <utility>
#include <vector>

#include "bott/bott.hpp"

// Shared fixtures: the 7x7 matrix behind the CLI's `example` subcommand
// (five staircase rows, two zero rows) and deterministic random generators.
namespace fixtures {

inline constexpr const char* example7_text =
    "0110000\n"
    "0011000\n"
    "0001100\n"
    "0000110\n"
    "0000011\n"
    "0000000\n"
    "0000000\n";

inline bott::BottMatrix example7() { return bott::parse_matrix(example7_text); }

inline bott::BottMatrix klein() { return bott::BottMatrix(2, {{1, 2}}); }

inline bott::BottMatrix random_matrix(std::mt19937_64& rng, int n) {
    std::vector<std::pair<int, int>> entries;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() & 1u) entries.emplace_back(i, j);
    return bott::BottMatrix(n, entries);
}

/// Up to max_terms random square-free monomials of degree <= max_degree,
/// summed mod 2.
inline bott::Z2Polynomial random_polynomial(std::mt19937_64& rng, int n, int max_terms = 6,
                                            int max_degree = 3) {
    std::vector<bott::Monomial> terms;
    if (max_degree > n) max_degree = n;
    int count = static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms + 1));
    for (int t = 0; t < count; ++t) {
        int degree = static_cast<int>(rng() % static_cast<std::uint64_t>(max_degree + 1));
        bott::Monomial m = 0;
        while (std::popcount(m) < degree) m |= bott::Monomial{1} << (rng() % static_cast<std::uint64_t>(n));
        terms.push_back(m);
    }
    return bott::Z2Polynomial::from_terms(std::move(terms));
}

}  // namespace fixtures
