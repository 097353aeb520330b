#include <doctest.h>

#include "chowkit/bundle.hpp"
#include "chowkit/tower.hpp"

using namespace chowkit;

namespace {

const SpaceContext& pe() {
    static const SpaceContext ctx = build_space(SpaceId::PE, 4);
    return ctx;
}

}  // namespace

TEST_CASE("twist of the vertical cotangent line by W") {
    const auto twisted = twist_by_line(line_bundle(pe().cls("c1Omega_vert")), pe().cls("c1W"));
    CHECK(twisted.rank == 1);
    CHECK(twisted.chern(1) == pe().gen("zeta_p"));
    CHECK(top_chern(twisted) == pe().gen("zeta_p"));
}

TEST_CASE("dual flips odd classes") {
    const auto b = bundle_from_chern(2, {pe().parse("zeta_p - a1"), pe().parse("a2")});
    const auto d = dual(b);
    CHECK(d.chern(1) == pe().parse("-zeta_p + a1"));
    CHECK(d.chern(2) == pe().parse("a2"));
}

TEST_CASE("whitney sum of lines") {
    const auto s = whitney_sum(line_bundle(pe().parse("zeta_p")), line_bundle(pe().parse("z")));
    CHECK(s.rank == 2);
    CHECK(s.chern(1) == pe().parse("zeta_p + z"));
    CHECK(s.chern(2) == pe().parse("z*zeta_p"));
}

TEST_CASE("inverse total Chern class") {
    const auto x = pe().parse("zeta_p");
    const auto inv = inverse_total_chern(line_bundle(x), 3);
    CHECK(inv.formal);
    CHECK(inv.total == (pe().one() - x + x * x - x * x * x).truncated(3));
    CHECK(inverse_total_chern(trivial_bundle(pe().presentation), 3).total == pe().one());
    const auto t = line_bundle(pe().cls("c1T_rel_B"));
    CHECK(inverse_total_chern(t, 1).total == pe().one() - pe().parse("2*zeta_p - a1 - g*z"));
    CHECK_THROWS_AS(top_chern(inv), BundleError);
}

TEST_CASE("principal parts") {
    const auto omega = pe().cls("c1Omega_vert");
    const auto w = pe().cls("c1W");
    CHECK(principal_parts_chern(0, omega, w).total == line_bundle(w).total);
    const auto p2 = principal_parts_chern(2, omega, w);
    CHECK(p2.rank == 3);
    CHECK(p2.chern(1) == pe().parse("3*zeta_p"));
    const auto free = principal_parts_chern(2, free_mode(omega), free_mode(w));
    const auto fp = free.total.presentation();
    CHECK(free.chern(3) == ChowElement::parse(fp, "-3*zeta_p^3 + 4*(a1 + (g+2)*z)*zeta_p^2 - (a1 + (g+2)*z)^2*zeta_p"));
    CHECK(top_chern(p2) == pe().parse("3*(a2 + a2p*z)*zeta_p - (a1 + (g+2)*z)*(a2 + a2p*z)"));
    CHECK_THROWS_AS(principal_parts_chern(-1, omega, w), BundleError);
}

TEST_CASE("top Chern classes") {
    CHECK(top_chern(line_bundle(pe().gen("zeta_p"))) == pe().gen("zeta_p"));
    CHECK(top_chern(trivial_bundle(pe().presentation)) == pe().one());
}

TEST_CASE("excess classes") {
    const auto p2 = principal_parts_chern(2, pe().cls("c1Omega_vert"), pe().cls("c1W"));
    const auto tangent = line_bundle(pe().cls("c1T_rel_B"));
    CHECK(excess_class(p2, tangent, 3, 2) == pe().parse("zeta_p + a1 + g*z"));
    CHECK(excess_class(p2, tangent, 3, 3) == pe().one());
    CHECK(excess_class(p2, trivial_bundle(pe().presentation), 1, 0) == p2.chern(1));
    CHECK_THROWS_AS(excess_class(p2, tangent, 1, 2), BundleError);
}

TEST_CASE("line bundles need a degree-one class") {
    CHECK_THROWS_AS(line_bundle(pe().parse("a2")), BundleError);
}
