#pragma once

// Shared test helpers: independent oracles and random generators.

#include "chowkit/chow_element.hpp"
#include "chowkit/linalg.hpp"
#include "chowkit/tower.hpp"

#include <random>
#include <vector>

namespace chowkit::testing {

// Cofactor expansion along the first row. Exponential, only for small matrices,
// and deliberately unrelated to the elimination code it checks.
template <class T>
T cofactor_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return T(1);
    if (n == 1) return m[0][0];
    T acc{};
    for (std::size_t c = 0; c < n; ++c) {
        if (m[0][c] == T{}) continue;
        std::vector<std::vector<T>> minor;
        for (std::size_t r = 1; r < n; ++r) {
            std::vector<T> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != c) row.push_back(m[r][k]);
            minor.push_back(std::move(row));
        }
        T term = m[0][c] * cofactor_det(minor);
        if (c % 2 == 1) term = T{} - term;
        acc = acc + term;
    }
    return acc;
}

// Largest k with a nonzero k x k minor, by cofactor determinants.
std::size_t minor_rank(const RatMatrix& m);

// A ring homomorphism out of the tower presentations into Q, for spot-checking
// reduction: pick z, zeta_p, a1, a2p, g freely; then c2 = -z^2,
// a2 = A zeta_p - zeta_p^2 - a2p z, zeta_q = A - zeta_p (the other root).
struct PointEvaluation {
    Rational g, z, zeta_p, zeta_q, a1, a2, a2p, c2;

    static PointEvaluation random(std::mt19937_64& rng);
    // Evaluates any element (reduced or free) whose generators are tower names.
    [[nodiscard]] Rational operator()(const ChowElement& e) const;
};

Rational random_rational(std::mt19937_64& rng, int span = 5);
ParamPoly random_param_poly(std::mt19937_64& rng, int max_degree = 2);

// Random element with at most `max_terms` terms of weighted degree <= max_degree,
// built as a raw term map and reduced.
ChowElement random_element(const PresentationPtr& p, std::mt19937_64& rng, int max_degree = 3, int max_terms = 4);
// Random homogeneous element of weighted degree d.
ChowElement random_homogeneous(const PresentationPtr& p, std::mt19937_64& rng, int d, int max_terms = 4);
// Random raw (unreduced) term map with exponents up to 3.
TermMap random_raw_terms(const RingPresentation& p, std::mt19937_64& rng, int max_terms = 5);

}  // namespace chowkit::testing
