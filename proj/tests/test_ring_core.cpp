#include <doctest.h>

#include "chowkit/chow_element.hpp"
#include "chowkit/tower.hpp"

#include <cstdlib>

using namespace chowkit;

TEST_CASE("rational arithmetic stays in lowest terms") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(-7).abs() == Rational(7));
    CHECK_THROWS(Rational::parse("1/0"));
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK(Rational(1, 3) < Rational(1, 2));
}

TEST_CASE("genus polynomials") {
    const ParamPoly g = ParamPoly::g();
    const ParamPoly sq = (g + ParamPoly(2)).pow(2);
    CHECK(sq.to_string() == "g^2+4*g+4");
    CHECK((g * Rational(-1, 2)).to_string() == "-1/2*g");
    CHECK(ParamPoly().to_string() == "0");
    CHECK(sq.evaluate(Rational(4)) == Rational(36));
    CHECK(sq.exact_div(g + ParamPoly(2)) == g + ParamPoly(2));
    CHECK_THROWS_AS((void)sq.exact_div(g), std::domain_error);
    const auto [q, r] = sq.divmod(g);
    CHECK(q == g + ParamPoly(4));
    CHECK(r == ParamPoly(4));
    CHECK(gcd(sq, (g + ParamPoly(2)) * (g - ParamPoly(1))) == g + ParamPoly(2));
    CHECK((ParamPoly(3) * g + ParamPoly(6)).monic() == g + ParamPoly(2));
    CHECK(sq.needs_parentheses());
    CHECK_FALSE((g * Rational(5)).needs_parentheses());
}

TEST_CASE("nonnegative integer roots") {
    const ParamPoly g = ParamPoly::g();
    const ParamPoly det = ParamPoly(-36) * (ParamPoly(2) * g + ParamPoly(1)) * (g + ParamPoly(1));
    CHECK(nonnegative_integer_roots(det).empty());
    CHECK(nonnegative_integer_roots(g * (g - ParamPoly(3)) * (g + ParamPoly(2))) == std::vector<long>{0, 3});
    CHECK(nonnegative_integer_roots(g * Rational(2) - ParamPoly(1)).empty());
    CHECK(nonnegative_integer_roots(ParamPoly(5)).empty());
    CHECK_THROWS_AS(nonnegative_integer_roots(ParamPoly()), std::domain_error);
}

TEST_CASE("presentation construction") {
    SUBCASE("projective bundle over the base") {
        auto p = make_presentation({{"z", 1}, {"c2", 2}}, {{"z", "-c2"}});
        CHECK(p->has_rules());
    }
    SUBCASE("unknown symbol in a rule") {
        CHECK_THROWS_AS(make_presentation({{"x", 1}}, {{"x", "a1"}}), PresentationError);
    }
    SUBCASE("duplicate and reserved names") {
        CHECK_THROWS_AS(make_presentation({{"x", 1}, {"x", 1}}, {}), PresentationError);
        CHECK_THROWS_AS(make_presentation({{"g", 1}}, {}), PresentationError);
    }
    SUBCASE("degree mismatch") {
        CHECK_THROWS_AS(make_presentation({{"x", 1}, {"y", 1}}, {{"x", "y"}}), PresentationError);
        CHECK_THROWS_AS(make_presentation({{"x", 0}}, {}), PresentationError);
    }
    SUBCASE("rule on an unknown generator") {
        CHECK_THROWS_AS(make_presentation({{"x", 1}}, {{"y", "x^2"}}), PresentationError);
    }
    SUBCASE("rule keeping the square") {
        CHECK_THROWS_AS(make_presentation({{"x", 1}, {"y", 1}}, {{"x", "x^2 + y^2"}}), PresentationError);
    }
}

TEST_CASE("normal forms on PE") {
    const auto pe = build_space(SpaceId::PE, 4);
    const auto zp = pe.gen("zeta_p");
    CHECK((zp * zp).to_string() == "(g+2)*z*zeta_p + a1*zeta_p - a2 - a2p*z");
    CHECK(zp * zp == pe.parse("a1*zeta_p + (g+2)*z*zeta_p - a2 - a2p*z"));
    const auto z = pe.gen("z");
    CHECK((z * z * z) == pe.parse("-c2*z"));
    const auto e = pe.parse("3*zeta_p - a1");
    CHECK(e * pe.one() == e);
    CHECK(e + ChowElement(pe.presentation) == e);
    CHECK((e - e).is_zero());
    CHECK((-e).to_string() == "-3*zeta_p + a1");
}

TEST_CASE("graded parts") {
    const auto pe = build_space(SpaceId::PE, 4);
    const auto e = pe.parse("1 + 3*zeta_p + 3*zeta_p^2");
    CHECK(e.graded_part(1) == pe.parse("3*zeta_p"));
    CHECK(e.max_degree() == 2);
    CHECK_FALSE(e.is_homogeneous());
    CHECK(e.graded_part(2).is_homogeneous(2));
    const auto A = pe.parse("a1 + (g+2)*z");
    CHECK((A * A).graded_part(2) == pe.parse("a1^2 + 2*(g+2)*a1*z - (g+2)^2*c2"));
    CHECK(e.truncated(1) == pe.parse("1 + 3*zeta_p"));
}

TEST_CASE("coefficient extraction") {
    const auto pe = build_space(SpaceId::PE, 4);
    const auto A = pe.parse("a1 + (g+2)*z");
    const auto B = pe.parse("a2 + a2p*z");
    const auto three = ParamPoly(3);
    {
        const auto [c, rest] = coefficient_extract(B * pe.gen("zeta_p") * three - A * B, "zeta_p");
        CHECK(c == B * three);
        CHECK(rest == -(A * B));
    }
    {
        const auto [c, rest] = coefficient_extract(pe.parse("7"), "zeta_p");
        CHECK(c.is_zero());
        CHECK(rest == pe.parse("7"));
    }
    {
        const auto p = build_space(SpaceId::P, 4);
        const auto [c, rest] = coefficient_extract(p.parse("3*a2 + 3*a2p*z"), "z");
        CHECK(c == p.parse("3*a2p"));
        CHECK(rest == p.parse("3*a2"));
    }
}

TEST_CASE("parameter evaluation") {
    const auto pe = build_space(SpaceId::PE, 4);
    CHECK(pe.parse("(g+2)*z").evaluate_parameter(4) == pe.parse("6*z"));
    CHECK(pe.parse("(8*g+12)*a1 - 9*a2p").evaluate_parameter(0) == pe.parse("12*a1 - 9*a2p"));
    CHECK_THROWS((void)pe.parse("zeta_p + zeta_q"));
}
