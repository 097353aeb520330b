#include <doctest.h>

#include "support.hpp"

#include "chowkit/verify.hpp"

using namespace chowkit;
using chowkit::testing::cofactor_det;
using chowkit::testing::minor_rank;

TEST_CASE("rational determinant and rank against cofactor expansion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 5;
        RatMatrix m(n, std::vector<Rational>(n));
        for (auto& row : m)
            for (auto& x : row) x = chowkit::testing::random_rational(rng, 3);
        if (trial % 4 == 0 && n > 1) m[n - 1] = m[0];
        CHECK(determinant(m) == cofactor_det(m));
        CHECK(rank(m) == minor_rank(m));
    }
}

TEST_CASE("polynomial determinant against cofactor expansion") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 1 + trial % 4;
        PolyMatrix m(n, std::vector<ParamPoly>(n));
        for (auto& row : m)
            for (auto& x : row) x = chowkit::testing::random_param_poly(rng, 2);
        CHECK(determinant(m) == cofactor_det(m));
        for (long g0 : {0L, 3L}) CHECK(determinant(evaluate_matrix(m, g0)) == determinant(m).evaluate(Rational(g0)));
    }
}

TEST_CASE("rational functions normalize") {
    const ParamPoly g = ParamPoly::g();
    const RatFunc f(ParamPoly(-2), ParamPoly(2) * g + ParamPoly(2));
    CHECK(f.to_string() == "-1/(g+1)");
    CHECK(RatFunc(g * g - ParamPoly(1), g + ParamPoly(1)).is_polynomial());
    CHECK((f * RatFunc(g + ParamPoly(1))) == RatFunc(ParamPoly(-1)));
    CHECK((f - f).is_zero());
}

TEST_CASE("single relation slice rank") {
    const auto x = build_space(SpaceId::X111, 4);
    CHECK(degree_slice_rank({x.parse("a1")}, 1).report.generic_rank == 1);
    CHECK(degree_slice_rank({ChowElement(x.presentation)}, 1).report.generic_rank == 0);
    CHECK_THROWS_AS(coefficient_matrix({x.parse("a1 + 1")}, 1, monomial_basis(*x.presentation, 1)),
                    std::invalid_argument);
}

TEST_CASE("X111 degree-1 relations have rank 5 for every genus") {
    const auto x = build_space(SpaceId::X111, 4);
    const std::vector<ChowElement> rels{x.parse("zeta_p"), x.parse("zeta_q"), x.parse("a1"), x.parse("a2p"),
                                        x.parse("zeta_p + zeta_q - (g+2)*z - a1")};
    const auto slice = degree_slice_rank(rels, 1);
    CHECK(slice.basis.size() == 5);
    CHECK(slice.report.generic_rank == 5);
    CHECK(slice.report.full_column_rank());
    for (long g0 = 0; g0 <= 20; ++g0) CHECK(degree_slice_rank_at(rels, 1, g0) == 5);
}

TEST_CASE("rank report finds genuine drops") {
    const ParamPoly g = ParamPoly::g();
    const PolyMatrix m{{g - ParamPoly(2), ParamPoly(0)}, {ParamPoly(0), ParamPoly(1)}};
    const auto rep = rank_report(m);
    CHECK(rep.generic_rank == 2);
    CHECK(rep.drop_points == std::vector<long>{2});
    CHECK_FALSE(rep.uniform());
    const PolyMatrix tall{{g - ParamPoly(2)}, {ParamPoly(1)}};
    const auto tall_rep = rank_report(tall);
    CHECK(tall_rep.uniform());
    CHECK(tall_rep.full_column_rank());
}

TEST_CASE("rref over rational functions") {
    const ParamPoly g = ParamPoly::g();
    const PolyMatrix m{{g + ParamPoly(1), ParamPoly(1)}, {ParamPoly(2) * g + ParamPoly(2), ParamPoly(2)}};
    const auto r = rref(m);
    CHECK(r.rows.size() == 1);
    CHECK(r.pivot_columns.size() == 1);
}

TEST_CASE("degree-1 determinant for the triple ramification relations") {
    const auto rep = relation_determinant();
    const ParamPoly g = ParamPoly::g();
    const ParamPoly expected = ParamPoly(-36) * (ParamPoly(2) * g + ParamPoly(1)) * (g + ParamPoly(1));
    CHECK(rep.determinant == expected);
    std::vector<std::vector<ParamPoly>> copy = rep.matrix;
    CHECK(cofactor_det(copy) == expected);
    CHECK(rep.determinant.evaluate(Rational(0)) == Rational(-36));
    CHECK(rep.nonnegative_roots.empty());
    for (long g0 = 0; g0 <= 5; ++g0)
        CHECK(cofactor_det(evaluate_matrix(rep.matrix, g0)) == expected.evaluate(Rational(g0)));
    for (long g0 = 0; g0 <= 50; ++g0) CHECK(rank(evaluate_matrix(rep.matrix, g0)) == 4);
    CHECK(rep.rows == std::vector<std::string>{"REL-3-DELTA-INPUT", "REL-3-CONTACT4", "REL-3-NODE", "REL-3-TT"});
    CHECK(rep.columns == std::vector<std::string>{"zeta_p", "z", "a1", "a2p"});
}
