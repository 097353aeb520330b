#include "chowkit/tower.hpp"

#include <stdexcept>

namespace chowkit {

namespace {

const char* const kA = "a1 + (g+2)*z";
const char* const kB = "a2 + a2p*z";

std::vector<Generator> generators_for(SpaceId id) {
    std::vector<Generator> gens;
    const bool two = id == SpaceId::X111 || id == SpaceId::Xtilde3;
    const bool one = id == SpaceId::PE || id == SpaceId::X3;
    if (one || two) gens.push_back({"zeta_p", 1});
    if (two) gens.push_back({"zeta_q", 1});
    if (id != SpaceId::B) gens.push_back({"z", 1});
    gens.push_back({"a1", 1});
    gens.push_back({"a2", 2});
    gens.push_back({"a2p", 1});
    gens.push_back({"c2", 2});
    return gens;
}

std::string zeta_rule() { return std::string("(") + kA + ")*ZETA - (" + kB + ")"; }

std::string replace_all(std::string text, std::string_view from, std::string_view to) {
    std::size_t pos = 0;
    while ((pos = text.find(from, pos)) != std::string::npos) {
        text.replace(pos, from.size(), to);
        pos += to.size();
    }
    return text;
}

void install_point_classes(SpaceContext& ctx, const std::string& zeta, const std::string& suffix) {
    auto add = [&](const std::string& name, const std::string& text) {
        ctx.named_classes.emplace(name + suffix, ctx.parse(replace_all(text, "ZETA", zeta)));
    };
    add("c1W", "3*ZETA - a1 - (g+2)*z");
    add("c1Omega_vert", "-2*ZETA + a1 + (g+2)*z");
    add("c1T_rel_B", "2*ZETA - a1 - g*z");
    add("c1Q", "-(a1 + (g+2)*z) + ZETA");
}

}  // namespace

std::string to_string(SpaceId id) {
    switch (id) {
        case SpaceId::B: return "B";
        case SpaceId::P: return "P";
        case SpaceId::PE: return "PE";
        case SpaceId::X111: return "X111";
        case SpaceId::X3: return "X3";
        case SpaceId::Xtilde3: return "Xtilde3";
    }
    return "?";
}

SpaceId parse_space_id(std::string_view name) {
    for (SpaceId id : {SpaceId::B, SpaceId::P, SpaceId::PE, SpaceId::X111, SpaceId::X3, SpaceId::Xtilde3})
        if (to_string(id) == name) return id;
    throw std::invalid_argument("unknown space '" + std::string(name) + "'");
}

std::string to_string(PushMap m) {
    switch (m) {
        case PushMap::gamma: return "gamma";
        case PushMap::pi: return "pi";
        case PushMap::gamma_then_pi: return "gamma_then_pi";
        case PushMap::eta_p: return "eta_p";
    }
    return "?";
}

const ChowElement& SpaceContext::cls(const std::string& name) const {
    auto it = named_classes.find(name);
    if (it == named_classes.end())
        throw std::out_of_range("space " + to_string(id) + " has no class named '" + name + "'");
    return it->second;
}

ChowElement SpaceContext::gen(std::string_view name) const { return ChowElement::generator(presentation, name); }

ChowElement SpaceContext::parse(std::string_view text) const { return ChowElement::parse(presentation, text); }

std::vector<std::string> SpaceContext::zetas() const {
    std::vector<std::string> out;
    for (const char* z : {"zeta_p", "zeta_q"})
        if (presentation->find(z)) out.emplace_back(z);
    return out;
}

SpaceContext build_space(SpaceId id, std::optional<int> truncation) {
    const int trunc = truncation.value_or(default_truncation_degree());
    auto gens = generators_for(id);
    std::vector<SquareRuleSpec> rules;
    std::vector<std::string> priority;
    const bool two = id == SpaceId::X111 || id == SpaceId::Xtilde3;
    const bool one = id == SpaceId::PE || id == SpaceId::X3;
    if (two) {
        rules.push_back({"zeta_q", replace_all(zeta_rule(), "ZETA", "zeta_q")});
        priority.emplace_back("zeta_q");
    }
    if (one || two) {
        rules.push_back({"zeta_p", replace_all(zeta_rule(), "ZETA", "zeta_p")});
        priority.emplace_back("zeta_p");
    }
    if (id != SpaceId::B) {
        rules.push_back({"z", "-c2"});
        priority.emplace_back("z");
    }

    SpaceContext ctx;
    ctx.id = id;
    ctx.presentation = make_presentation(std::move(gens), std::move(rules), trunc, std::move(priority));
    if (id == SpaceId::B) return ctx;

    ctx.named_classes.emplace("c1E", ctx.parse(kA));
    ctx.named_classes.emplace("c2E", ctx.parse(kB));
    ctx.named_classes.emplace("c1Omega_base", ctx.parse("-2*z"));
    if (one) install_point_classes(ctx, "zeta_p", "");
    if (two) {
        install_point_classes(ctx, "zeta_p", "_p");
        install_point_classes(ctx, "zeta_q", "_q");
    }
    return ctx;
}

SpaceId pushforward_target(SpaceId from, PushMap along) {
    const bool two = from == SpaceId::X111 || from == SpaceId::Xtilde3;
    const bool one = from == SpaceId::PE || from == SpaceId::X3;
    switch (along) {
        case PushMap::gamma:
            if (one) return SpaceId::P;
            if (two) return SpaceId::PE;
            break;
        case PushMap::pi:
            if (from != SpaceId::B) return SpaceId::B;
            break;
        case PushMap::gamma_then_pi:
            if (one) return SpaceId::B;
            break;
        case PushMap::eta_p:
            if (two) return SpaceId::X3;
            break;
    }
    throw PushforwardError("no map " + to_string(along) + " out of " + to_string(from));
}

ChowElement pushforward(const SpaceContext& ctx, const ChowElement& e, PushMap along, std::string_view zeta) {
    if (!same_presentation(e.presentation(), ctx.presentation))
        throw MixedPresentationError("class does not live on " + to_string(ctx.id));
    const SpaceId target_id = pushforward_target(ctx.id, along);
    const SpaceContext target = build_space(target_id, ctx.presentation->truncation_degree());

    switch (along) {
        case PushMap::gamma: {
            if (zeta != "zeta_p" && zeta != "zeta_q")
                throw PushforwardError("gamma extracts zeta_p or zeta_q, not '" + std::string(zeta) + "'");
            if (!ctx.presentation->find(zeta))
                throw PushforwardError(to_string(ctx.id) + " has no " + std::string(zeta));
            ChowElement coeff = coefficient_extract(e, zeta).first;
            if (zeta == "zeta_p" && ctx.presentation->find("zeta_q")) {
                // Rename the surviving zeta_q to zeta_p by going through the free ring.
                const ChowElement& free = free_mode(coeff);
                TermMap raw;
                const auto& fp = free.presentation();
                const std::size_t iq = fp->index("zeta_q");
                const std::size_t ip = fp->index("zeta_p");
                for (const auto& [exps, c] : free.terms()) {
                    Exponents moved = exps;
                    moved[ip] = exps[iq];
                    moved[iq] = 0;
                    terms::add_into(raw, moved, c);
                }
                coeff = ChowElement::from_terms(fp, std::move(raw));
            }
            return embed(coeff, target.presentation);
        }
        case PushMap::pi: {
            if (!ctx.zetas().empty()) {
                for (const auto& zname : ctx.zetas())
                    if (!coefficient_extract(e, zname).first.is_zero())
                        throw PushforwardError("pi needs a zeta-free class, got " + e.to_string());
            }
            const SpaceContext p = build_space(SpaceId::P, ctx.presentation->truncation_degree());
            const ChowElement on_p = embed(e, p.presentation);
            return embed(coefficient_extract(on_p, "z").first, target.presentation);
        }
        case PushMap::gamma_then_pi: {
            const SpaceContext p = build_space(SpaceId::P, ctx.presentation->truncation_degree());
            return pushforward(p, pushforward(ctx, e, PushMap::gamma, "zeta_p"), PushMap::pi);
        }
        case PushMap::eta_p: {
            if (!coefficient_extract(e, "zeta_q").first.is_zero())
                throw PushforwardError("eta_p needs a zeta_q-free class, got " + e.to_string());
            return embed(e, target.presentation);
        }
    }
    throw PushforwardError("unknown map");
}

ChowElement pullback(const ChowElement& e, const SpaceContext& target) { return embed(e, target.presentation); }

}  // namespace chowkit
