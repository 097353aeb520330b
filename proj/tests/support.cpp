#include "support.hpp"

#include <algorithm>

namespace chowkit::testing {

std::size_t minor_rank(const RatMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    for (std::size_t k = std::min(rows, cols); k > 0; --k) {
        std::vector<std::size_t> rs(k), cs(k);
        // iterate over all k-subsets of rows and columns
        std::vector<bool> rsel(rows, false), csel(cols, false);
        std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
        do {
            std::fill(csel.begin(), csel.end(), false);
            std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
            do {
                RatMatrix sub;
                for (std::size_t r = 0; r < rows; ++r) {
                    if (!rsel[r]) continue;
                    std::vector<Rational> row;
                    for (std::size_t c = 0; c < cols; ++c)
                        if (csel[c]) row.push_back(m[r][c]);
                    sub.push_back(std::move(row));
                }
                if (!cofactor_det(sub).is_zero()) return k;
            } while (std::prev_permutation(csel.begin(), csel.end()));
        } while (std::prev_permutation(rsel.begin(), rsel.end()));
    }
    return 0;
}

Rational random_rational(std::mt19937_64& rng, int span) {
    std::uniform_int_distribution<long> num(-span, span);
    std::uniform_int_distribution<long> den(1, 3);
    return Rational(num(rng), den(rng));
}

ParamPoly random_param_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> coeffs;
    for (int i = 0, d = deg(rng); i <= d; ++i) coeffs.push_back(random_rational(rng, 4));
    return ParamPoly::from_coefficients(coeffs);
}

PointEvaluation PointEvaluation::random(std::mt19937_64& rng) {
    PointEvaluation p;
    p.g = Rational(std::uniform_int_distribution<long>(0, 9)(rng));
    p.z = random_rational(rng);
    p.zeta_p = random_rational(rng);
    p.a1 = random_rational(rng);
    p.a2p = random_rational(rng);
    const Rational A = p.a1 + (p.g + Rational(2)) * p.z;
    p.c2 = -(p.z * p.z);
    p.a2 = A * p.zeta_p - p.zeta_p * p.zeta_p - p.a2p * p.z;
    p.zeta_q = A - p.zeta_p;
    return p;
}

Rational PointEvaluation::operator()(const ChowElement& e) const {
    const auto& gens = e.presentation()->generators();
    std::vector<Rational> value;
    for (const auto& gen : gens) {
        if (gen.name == "z") value.push_back(z);
        else if (gen.name == "zeta_p") value.push_back(zeta_p);
        else if (gen.name == "zeta_q") value.push_back(zeta_q);
        else if (gen.name == "a1") value.push_back(a1);
        else if (gen.name == "a2") value.push_back(a2);
        else if (gen.name == "a2p") value.push_back(a2p);
        else if (gen.name == "c2") value.push_back(c2);
        else throw std::invalid_argument("no value for " + gen.name);
    }
    Rational acc;
    for (const auto& [exps, c] : e.terms()) {
        Rational t = c.evaluate(g);
        for (std::size_t i = 0; i < exps.size(); ++i) t *= value[i].pow(exps[i]);
        acc += t;
    }
    return acc;
}

TermMap random_raw_terms(const RingPresentation& p, std::mt19937_64& rng, int max_terms) {
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<int> expo(0, 3);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(p.size()) - 1);
    TermMap raw;
    for (int t = 0, n = count(rng); t < n; ++t) {
        Exponents e(p.size(), 0);
        // two or three generators per monomial keeps sizes sane
        for (int k = 0; k < 3; ++k) e[static_cast<std::size_t>(pick(rng))] = static_cast<std::uint16_t>(expo(rng));
        terms::add_into(raw, e, random_param_poly(rng, 1));
    }
    return raw;
}

namespace {

std::vector<Exponents> monomials_up_to(const RingPresentation& p, int max_degree) {
    std::vector<Exponents> all;
    for (int d = 0; d <= max_degree; ++d) {
        auto part = monomial_basis(p, d);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

}  // namespace

ChowElement random_element(const PresentationPtr& p, std::mt19937_64& rng, int max_degree, int max_terms) {
    const auto monos = monomials_up_to(*p, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> count(0, max_terms);
    TermMap raw;
    for (int t = 0, n = count(rng); t < n; ++t) terms::add_into(raw, monos[pick(rng)], random_param_poly(rng));
    return ChowElement::from_terms(p, std::move(raw));
}

ChowElement random_homogeneous(const PresentationPtr& p, std::mt19937_64& rng, int d, int max_terms) {
    const auto monos = monomial_basis(*p, d);
    std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
    std::uniform_int_distribution<int> count(0, max_terms);
    TermMap raw;
    for (int t = 0, n = count(rng); t < n; ++t) terms::add_into(raw, monos[pick(rng)], random_param_poly(rng));
    return ChowElement::from_terms(p, std::move(raw));
}

}  // namespace chowkit::testing
