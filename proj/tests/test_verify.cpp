#include <doctest.h>

#include "chowkit/verify.hpp"

using namespace chowkit;

TEST_CASE("every relation holds symbolically") {
    CHECK(all_lemmas().size() == 9);
    for (LemmaId id : all_lemmas()) {
        CAPTURE(to_string(id));
        const auto v = verify_relation(id);
        CHECK(v.pass);
        CHECK(v.computed == v.expected);
        CHECK(v.computed == build_space(lemma_space(id), 4).parse(lemma_expected_text(id)));
    }
}

TEST_CASE("relation classes") {
    CHECK(verify_relation(LemmaId::Rel111Delta).computed.to_string() == "zeta_p + zeta_q - (g+2)*z - a1");
    CHECK(verify_relation(LemmaId::Rel111RamP).computed.to_string() == "zeta_p");
    CHECK(verify_relation(LemmaId::Rel111RamQ).computed.to_string() == "zeta_q");
    const auto contact = verify_relation(LemmaId::Rel3Contact4);
    CHECK(contact.expected == build_space(SpaceId::X3, 4).parse("-3*zeta_p + 2*a1 + 2*(g+2)*z"));
    const auto tt = verify_relation(LemmaId::Rel3TT);
    CHECK(tt.expected == build_space(SpaceId::X3, 4).parse("-zeta_p - a1 + 3*a2p - g*z"));
}

TEST_CASE("specialized verdicts") {
    const auto v = verify_relation_at(LemmaId::Rel111Delta, 4);
    CHECK(v.pass);
    CHECK(v.computed.to_string() == "zeta_p + zeta_q - 6*z - a1");
    for (long g0 : {0L, 1L, 7L})
        for (LemmaId id : all_lemmas()) CHECK(verify_relation_at(id, g0).pass);
}

TEST_CASE("lemma identifiers") {
    for (LemmaId id : all_lemmas()) CHECK(parse_lemma_id(to_string(id)) == id);
    CHECK_THROWS_AS(parse_lemma_id("NOPE"), std::invalid_argument);
}

TEST_CASE("triple tangency chain stages") {
    const auto chain = tt_chain();
    CHECK(chain.pass);
    const auto x3 = build_space(SpaceId::X3, 4);
    const auto fp = chain.c3_free.presentation();
    CHECK(chain.c3_free ==
          ChowElement::parse(fp, "-3*zeta_p^3 + 4*(a1 + (g+2)*z)*zeta_p^2 - (a1 + (g+2)*z)^2*zeta_p"));
    CHECK(chain.c3_reduced == x3.parse("3*(a2 + a2p*z)*zeta_p - (a1 + (g+2)*z)*(a2 + a2p*z)"));
    CHECK(chain.push_gamma == build_space(SpaceId::P, 4).parse("3*a2 + 3*a2p*z"));
    CHECK(chain.push_pi == build_space(SpaceId::B, 4).parse("3*a2p"));
    CHECK(chain.alpha_Y == x3.parse("zeta_p + a1 + g*z"));
    CHECK(chain.tt_class == x3.parse("3*a2p - zeta_p - a1 - g*z"));
    CHECK(tt_chain_expectations().size() == 6);
}

TEST_CASE("triviality for ramification (2,1)") {
    const auto cert = triviality_check(RamificationProfile::P21);
    CHECK(cert.pass);
    CHECK(cert.pivots_nonvanishing);
    CHECK(cert.residual_zero);
    bool saw_zeta = false;
    bool saw_z = false;
    for (const auto& s : cert.solutions) {
        if (s.generator == "zeta_p") saw_zeta = s.to_string() == "zeta_p = -1/(g+1)*a1";
        if (s.generator == "z") saw_z = s.to_string() == "z = -1/(g+1)*a1";
    }
    CHECK(saw_zeta);
    CHECK(saw_z);
}

TEST_CASE("triviality for ramification (1,1,1)") {
    const auto cert = triviality_check(RamificationProfile::P111);
    CHECK(cert.pass);
    for (const auto& s : cert.solutions) {
        if (s.generator == "zeta_p" || s.generator == "zeta_q") CHECK(s.combination.empty());
    }
    for (const auto& [d, rep] : cert.full_rank) {
        CAPTURE(d);
        CHECK(rep.full_column_rank());
    }
}

TEST_CASE("triviality for ramification (3)") {
    const auto cert = triviality_check(RamificationProfile::P3);
    CHECK(cert.pass);
    REQUIRE(cert.determinant.has_value());
    CHECK(nonnegative_integer_roots(*cert.determinant).empty());
    CHECK(parse_profile(to_string(RamificationProfile::P3)) == RamificationProfile::P3);
    CHECK(to_string(RamificationProfile::P21) == "(2,1)");
}
