#include <doctest.h>

#include "chowkit/tower.hpp"

using namespace chowkit;

TEST_CASE("space presentations") {
    const auto p = build_space(SpaceId::P, 4);
    CHECK(p.zetas().empty());
    CHECK(p.gen("z") * p.gen("z") == p.parse("-c2"));
    const auto x = build_space(SpaceId::X111, 4);
    CHECK(x.zetas() == std::vector<std::string>{"zeta_p", "zeta_q"});
    CHECK(x.cls("c1W_p") + x.cls("c1Omega_vert_p") == x.gen("zeta_p"));
    CHECK_THROWS_AS((void)x.cls("missing"), std::out_of_range);
    CHECK(parse_space_id("Xtilde3") == SpaceId::Xtilde3);
    CHECK_THROWS(parse_space_id("Y"));
}

TEST_CASE("projective bundle pushforward") {
    const auto pe = build_space(SpaceId::PE, 4);
    CHECK(pushforward(pe, pe.one(), PushMap::gamma).is_zero());
    CHECK(pushforward(pe, pe.gen("zeta_p"), PushMap::gamma) == build_space(SpaceId::P, 4).one());
    const auto p = build_space(SpaceId::P, 4);
    CHECK(pushforward(p, p.parse("(g+2)*z*a1"), PushMap::pi) == build_space(SpaceId::B, 4).parse("(g+2)*a1"));
    CHECK(pushforward_target(SpaceId::PE, PushMap::gamma) == SpaceId::P);
    CHECK(pushforward_target(SpaceId::PE, PushMap::gamma_then_pi) == SpaceId::B);
}

TEST_CASE("pushforward of the triple contact class") {
    const auto x3 = build_space(SpaceId::X3, 4);
    const auto cls = x3.parse("3*(a2 + a2p*z)*zeta_p - (a1 + (g+2)*z)*(a2 + a2p*z)");
    CHECK(pushforward(x3, cls, PushMap::gamma_then_pi) == build_space(SpaceId::B, 4).parse("3*a2p"));
    CHECK(pushforward(x3, cls, PushMap::gamma).max_degree() == cls.max_degree() - 1);
}

TEST_CASE("forgetting the second point") {
    const auto xt = build_space(SpaceId::Xtilde3, 4);
    const auto pe = build_space(SpaceId::PE, 4);
    CHECK(pushforward(xt, xt.parse("zeta_p*a1"), PushMap::eta_p) == pe.parse("zeta_p*a1"));
    CHECK_THROWS_AS(pushforward(xt, xt.parse("zeta_q"), PushMap::eta_p), PushforwardError);
    CHECK_THROWS_AS(pushforward(pe, pe.one(), PushMap::eta_p), PushforwardError);
}

TEST_CASE("pullback embeds") {
    const auto b = build_space(SpaceId::B, 4);
    const auto pe = build_space(SpaceId::PE, 4);
    CHECK(pullback(b.parse("a1*a2p"), pe) == pe.parse("a1*a2p"));
}
