#include <doctest.h>

#include "chowkit/splitting.hpp"
#include "chowkit/sweep.hpp"

#include <algorithm>

using namespace chowkit;

TEST_CASE("symmetric cube degrees") {
    CHECK(splitting_sym3({2, 2}) == std::array<int, 4>{2, 2, 2, 2});
    CHECK(splitting_sym3({0, 2}) == std::array<int, 4>{-2, 0, 2, 4});
    CHECK(SplittingType(2, 4).genus() == 4);
    CHECK_THROWS_AS(SplittingType(3, 2), std::invalid_argument);
}

TEST_CASE("cohomology of lines on the projective line") {
    CHECK(p1_cohomology(-1) == std::pair{0, 0});
    CHECK(p1_cohomology(0) == std::pair{1, 0});
    CHECK(p1_cohomology(-3) == std::pair{0, 2});
    CHECK(p1_cohomology(4) == std::pair{5, 0});
}

TEST_CASE("globally generated locus") {
    CHECK(in_locus_B({2, 2}));
    CHECK_FALSE(in_locus_B({0, 2}));
    CHECK_FALSE(in_locus_B({1, 3}));
    CHECK(in_locus_B({2, 3}));
    CHECK(in_locus_B({2, 4}));
}

TEST_CASE("splitting types of a genus") {
    const auto types = splitting_types(4);
    for (const auto& st : types) CHECK(st.genus() == 4);
    const auto in_b = std::count_if(types.begin(), types.end(), [](const SplittingType& st) { return in_locus_B(st); });
    CHECK(in_b == 2);
}

TEST_CASE("row specs") {
    const auto s = parse_row_spec("3p3q");
    CHECK(s.order_p == 3);
    CHECK(s.order_q == 3);
    CHECK(parse_row_spec("1p1q").order_q == 1);
    CHECK(parse_row_spec("2p").order_q == 0);
    CHECK_THROWS_AS(parse_row_spec("3x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_row_spec(""), std::invalid_argument);
}

TEST_CASE("jet ranks") {
    const JetSpec six = parse_row_spec("3p3q");
    const auto balanced = jet_rank({2, 2}, six);
    CHECK(balanced.rows == 6);
    CHECK(balanced.rank == 6);
    // with 2m - n = 0 the six jets remain independent
    const auto edge = jet_rank({2, 4}, six);
    CHECK(edge.rows == 6);
    CHECK(edge.cols == 16);
    CHECK(edge.rank == 6);
    CHECK(jet_rank({2, 2}, parse_row_spec("1p1q")).rank == 2);
    // outside the locus the rank can fall
    CHECK(jet_rank({0, 4}, six).rank == 5);
}

TEST_CASE("jet sweep over the globally generated locus") {
    const auto six = sweep::jet_ranks(10, parse_row_spec("3p3q"));
    CHECK_FALSE(six.empty());
    for (const auto& e : six) {
        CHECK(e.in_B);
        CHECK(e.result.rank == 6);
    }
    for (const auto& e : sweep::jet_ranks(10, parse_row_spec("1p1q"))) CHECK(e.result.rank == 2);
}
