#include "chowkit/verify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace chowkit {

namespace {

struct LemmaInfo {
    LemmaId id;
    const char* name;
    SpaceId space;
    const char* expected;
};

const std::vector<LemmaInfo>& lemma_table() {
    static const std::vector<LemmaInfo> table{
        {LemmaId::Rel111Delta, "REL-111-DELTA", SpaceId::X111, "zeta_p + zeta_q - (g+2)*z - a1"},
        {LemmaId::Rel111RamP, "REL-111-RAM-P", SpaceId::X111, "zeta_p"},
        {LemmaId::Rel111RamQ, "REL-111-RAM-Q", SpaceId::X111, "zeta_q"},
        {LemmaId::Rel21Triple, "REL-21-TRIPLE", SpaceId::X3, "-zeta_p + a1 + (g+2)*z"},
        {LemmaId::Rel21Node, "REL-21-NODE", SpaceId::X3, "3*zeta_p - a1 - (g+4)*z"},
        {LemmaId::Rel3Contact4, "REL-3-CONTACT4", SpaceId::X3, "-3*zeta_p + 2*a1 + 2*(g+2)*z"},
        {LemmaId::Rel3Node, "REL-3-NODE", SpaceId::X3, "3*zeta_p - a1 - (g+4)*z"},
        {LemmaId::Rel3DeltaInput, "REL-3-DELTA-INPUT", SpaceId::X3, "(8*g+12)*a1 - 9*a2p"},
        {LemmaId::Rel3TT, "REL-3-TT", SpaceId::X3, "-zeta_p - a1 + 3*a2p - g*z"},
    };
    return table;
}

const LemmaInfo& info(LemmaId id) {
    for (const auto& row : lemma_table())
        if (row.id == id) return row;
    throw std::logic_error("lemma missing from table");
}

// Line bundle W twisted k times by the vertical cotangent line at one point.
ChowElement ramification_class(const SpaceContext& ctx, const std::string& suffix, int k,
                               std::vector<std::pair<std::string, ChowElement>>& story) {
    const ChowElement& w = ctx.cls("c1W" + suffix);
    const ChowElement& omega = ctx.cls("c1Omega_vert" + suffix);
    story.emplace_back("c1W" + suffix, w);
    story.emplace_back("c1Omega_vert" + suffix, omega);
    BundleClass b = line_bundle(w);
    for (int i = 0; i < k; ++i) b = twist_by_line(b, omega);
    return top_chern(b);
}

ChowElement node_class(const SpaceContext& ctx, std::vector<std::pair<std::string, ChowElement>>& story) {
    story.emplace_back("c1Omega_base", ctx.cls("c1Omega_base"));
    story.emplace_back("c1W", ctx.cls("c1W"));
    return top_chern(twist_by_line(line_bundle(ctx.cls("c1Omega_base")), ctx.cls("c1W")));
}

void expect_stage(const std::string& stage, const ChowElement& got, const ChowElement& want) {
    if (got != want)
        throw ChainError(stage, "computed " + got.to_string() + ", expected " + want.to_string());
}

}  // namespace

const std::vector<LemmaId>& all_lemmas() {
    static const std::vector<LemmaId> ids = [] {
        std::vector<LemmaId> out;
        for (const auto& row : lemma_table()) out.push_back(row.id);
        return out;
    }();
    return ids;
}

std::string to_string(LemmaId id) { return info(id).name; }

LemmaId parse_lemma_id(std::string_view text) {
    for (const auto& row : lemma_table())
        if (text == row.name) return row.id;
    throw std::invalid_argument("unknown lemma id '" + std::string(text) + "'");
}

SpaceId lemma_space(LemmaId id) { return info(id).space; }

std::string lemma_expected_text(LemmaId id) { return info(id).expected; }

Verdict verify_relation(LemmaId id) {
    const SpaceContext ctx = build_space(lemma_space(id));
    std::vector<std::pair<std::string, ChowElement>> story;
    ChowElement computed(ctx.presentation);
    switch (id) {
        case LemmaId::Rel111Delta: {
            // section of O(1) at p twisted by Q at q
            const ChowElement zp = ctx.gen("zeta_p");
            story.emplace_back("c1O(1)_p", zp);
            story.emplace_back("c1Q_q", ctx.cls("c1Q_q"));
            computed = top_chern(twist_by_line(line_bundle(zp), ctx.cls("c1Q_q")));
            break;
        }
        case LemmaId::Rel111RamP: computed = ramification_class(ctx, "_p", 1, story); break;
        case LemmaId::Rel111RamQ: computed = ramification_class(ctx, "_q", 1, story); break;
        case LemmaId::Rel21Triple: computed = ramification_class(ctx, "", 2, story); break;
        case LemmaId::Rel3Contact4: computed = ramification_class(ctx, "", 3, story); break;
        case LemmaId::Rel21Node:
        case LemmaId::Rel3Node: computed = node_class(ctx, story); break;
        case LemmaId::Rel3DeltaInput: computed = ctx.parse(lemma_expected_text(id)); break;
        case LemmaId::Rel3TT: {
            const ChainReport chain = tt_chain();
            story.emplace_back("push_pi", chain.push_pi);
            story.emplace_back("alpha_Y", chain.alpha_Y);
            computed = chain.tt_class;
            break;
        }
    }
    ChowElement expected = ctx.parse(lemma_expected_text(id));
    const bool pass = (computed - expected).is_zero();
    return Verdict{id, std::move(computed), std::move(expected), pass, std::move(story)};
}

Verdict verify_relation_at(LemmaId id, long g0) {
    Verdict v = verify_relation(id);
    v.computed = v.computed.evaluate_parameter(g0);
    v.expected = v.expected.evaluate_parameter(g0);
    for (auto& [name, cls] : v.narrative) cls = cls.evaluate_parameter(g0);
    v.pass = (v.computed - v.expected).is_zero();
    return v;
}

// ---------------------------------------------------------------------------
// TT chain

ChainError::ChainError(std::string stage, const std::string& detail)
    : std::runtime_error("tt chain stage '" + stage + "': " + detail), stage_(std::move(stage)) {}

const std::vector<std::pair<std::string, std::string>>& tt_chain_expectations() {
    static const std::vector<std::pair<std::string, std::string>> stages{
        {"c3_free", "-3*zeta_p^3 + 4*(a1 + (g+2)*z)*zeta_p^2 - (a1 + (g+2)*z)^2*zeta_p"},
        {"c3_reduced", "3*(a2 + a2p*z)*zeta_p - (a1 + (g+2)*z)*(a2 + a2p*z)"},
        {"push_gamma", "3*(a2 + a2p*z)"},
        {"push_pi", "3*a2p"},
        {"alpha_Y", "zeta_p + a1 + g*z"},
        {"tt_class", "-zeta_p - a1 + 3*a2p - g*z"},
    };
    return stages;
}

ChainReport tt_chain() {
    const auto& want = tt_chain_expectations();
    const SpaceContext x3 = build_space(SpaceId::X3);
    const SpaceContext p = build_space(SpaceId::P);
    const SpaceContext b = build_space(SpaceId::B);
    const PresentationPtr free = x3.presentation->free_variant();

    const BundleClass jets_free =
        principal_parts_chern(2, free_mode(x3.cls("c1Omega_vert")), free_mode(x3.cls("c1W")));
    ChowElement c3_free = top_chern(jets_free);
    expect_stage("c3_free", c3_free, ChowElement::parse(free, want[0].second));

    ChowElement c3_reduced = embed(c3_free, x3.presentation);
    const ChowElement c3_direct = top_chern(principal_parts_chern(2, x3.cls("c1Omega_vert"), x3.cls("c1W")));
    expect_stage("c3_reduced", c3_direct, c3_reduced);
    expect_stage("c3_reduced", c3_reduced, x3.parse(want[1].second));

    ChowElement push_gamma = pushforward(x3, c3_reduced, PushMap::gamma);
    expect_stage("push_gamma", push_gamma, p.parse(want[2].second));

    ChowElement push_pi = pushforward(p, push_gamma, PushMap::pi);
    expect_stage("push_pi", push_pi, b.parse(want[3].second));

    // Excess class along the diagonal of Xtilde3: jets of W at q restricted
    // to zeta_q = zeta_p, against the relative tangent bundle of PE over B.
    const SpaceContext xt = build_space(SpaceId::Xtilde3);
    const BundleClass jets_q = principal_parts_chern(2, xt.cls("c1Omega_vert_q"), xt.cls("c1W_q"));
    const ChowElement on_diagonal = substitute(jets_q.total, "zeta_q", xt.gen("zeta_p"));
    const BundleClass normal_ambient{3, pushforward(xt, on_diagonal, PushMap::eta_p), false};
    const BundleClass tangent_rel = whitney_sum(line_bundle(-x3.cls("c1Omega_vert")),
                                                line_bundle(-x3.cls("c1Omega_base")));
    if (tangent_rel.chern(1) != x3.cls("c1T_rel_B"))
        throw ChainError("alpha_Y", "c1 of the relative tangent bundle is " + tangent_rel.chern(1).to_string());
    ChowElement alpha = excess_class(normal_ambient, tangent_rel, 3, 2);
    expect_stage("alpha_Y", alpha, x3.parse(want[4].second));

    ChowElement tt = pullback(push_pi, x3) - alpha;
    expect_stage("tt_class", tt, x3.parse(want[5].second));

    return ChainReport{std::move(c3_free), std::move(c3_reduced), std::move(push_gamma),
                       std::move(push_pi),  std::move(alpha),      std::move(tt),
                       true};
}

// ---------------------------------------------------------------------------
// Triviality

std::string to_string(RamificationProfile mu) {
    switch (mu) {
        case RamificationProfile::P111: return "(1,1,1)";
        case RamificationProfile::P21: return "(2,1)";
        case RamificationProfile::P3: return "(3)";
    }
    return "?";
}

RamificationProfile parse_profile(std::string_view text) {
    for (auto mu : {RamificationProfile::P111, RamificationProfile::P21, RamificationProfile::P3})
        if (to_string(mu) == text) return mu;
    throw std::invalid_argument("unknown ramification profile '" + std::string(text) + "'");
}

std::string SolvedGenerator::to_string() const {
    std::string out = generator + " = ";
    if (combination.empty()) return out + "0";
    bool first = true;
    for (const auto& [name, c] : combination) {
        std::string coeff = c.to_string();
        const bool negative = !coeff.empty() && coeff[0] == '-' && c.num().terms().size() == 1;
        if (negative) coeff.erase(0, 1);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (coeff == "1")
            out += name;
        else if (c.num().needs_parentheses() && c.is_polynomial())
            out += "(" + coeff + ")*" + name;
        else
            out += coeff + "*" + name;
        first = false;
    }
    return out;
}

namespace {

std::vector<LemmaId> geometric_relations(RamificationProfile mu) {
    switch (mu) {
        case RamificationProfile::P111:
            return {LemmaId::Rel111RamP, LemmaId::Rel111RamQ, LemmaId::Rel111Delta};
        case RamificationProfile::P21: return {LemmaId::Rel21Triple, LemmaId::Rel21Node};
        case RamificationProfile::P3:
            return {LemmaId::Rel3DeltaInput, LemmaId::Rel3Contact4, LemmaId::Rel3Node, LemmaId::Rel3TT};
    }
    return {};
}

std::string monomial_name(const RingPresentation& pres, const Exponents& e) {
    std::string out;
    for (std::size_t i : pres.print_order()) {
        for (int k = 0; k < e[i]; ++k) {
            if (!out.empty()) out += '*';
            out += pres.generators()[i].name;
        }
    }
    return out.empty() ? "1" : out;
}

}  // namespace

TrivialityCertificate triviality_check(RamificationProfile mu) {
    TrivialityCertificate cert;
    cert.mu = mu;
    const auto ids = geometric_relations(mu);
    cert.space = lemma_space(ids.front());
    const SpaceContext ctx = build_space(cert.space);
    const auto& pres = *ctx.presentation;

    std::vector<ChowElement> geometric;
    for (LemmaId id : ids) {
        Verdict v = verify_relation(id);
        if (!v.pass) throw std::runtime_error("relation " + to_string(id) + " failed before triviality check");
        cert.relation_names.push_back(to_string(id));
        geometric.push_back(std::move(v.computed));
    }

    const auto basis1 = monomial_basis(pres, 1);
    for (const auto& e : basis1) cert.columns.push_back(monomial_name(pres, e));
    const PolyMatrix m = coefficient_matrix(geometric, 1, basis1);
    const Rref red = rref(m);

    cert.pivot_polynomials = red.divisors;
    cert.pivots_nonvanishing = std::all_of(red.divisors.begin(), red.divisors.end(), [](const ParamPoly& p) {
        return !p.is_zero() && nonnegative_integer_roots(p).empty();
    });

    // value[col] as a combination of the free columns
    const std::size_t ncols = basis1.size();
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : red.pivot_columns) is_pivot[c] = true;
    std::vector<std::vector<RatFunc>> value(ncols, std::vector<RatFunc>(ncols));
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) value[c][c] = RatFunc(ParamPoly(1));
    for (std::size_t r = 0; r < red.pivot_columns.size(); ++r) {
        const std::size_t pc = red.pivot_columns[r];
        SolvedGenerator sol;
        sol.generator = cert.columns[pc];
        for (std::size_t c = 0; c < ncols; ++c) {
            if (is_pivot[c] || red.rows[r][c].is_zero()) continue;
            value[pc][c] = -red.rows[r][c];
            sol.combination.emplace_back(cert.columns[c], value[pc][c]);
        }
        cert.solutions.push_back(std::move(sol));
    }

    cert.residual_zero = true;
    for (const auto& row : m) {
        for (std::size_t f = 0; f < ncols; ++f) {
            RatFunc acc;
            for (std::size_t c = 0; c < ncols; ++c) acc = acc + RatFunc(row[c]) * value[c][f];
            if (!acc.is_zero()) cert.residual_zero = false;
        }
    }

    // Full relation set: base generators vanish as well.
    std::vector<ChowElement> deg1 = geometric;
    std::vector<ChowElement> gens1;
    for (const auto& e : basis1) gens1.push_back(ChowElement::from_terms(ctx.presentation, TermMap{{e, ParamPoly(1)}}));
    deg1.push_back(ctx.gen("a1"));
    deg1.push_back(ctx.gen("a2p"));
    std::vector<ChowElement> deg2;
    for (const auto& r : deg1)
        for (const auto& x : gens1) deg2.push_back(r * x);
    deg2.push_back(ctx.gen("a2"));
    deg2.push_back(ctx.gen("c2"));
    cert.full_rank.emplace_back(1, degree_slice_rank(deg1, 1).report);
    cert.full_rank.emplace_back(2, degree_slice_rank(deg2, 2).report);

    if (mu == RamificationProfile::P3) cert.determinant = relation_determinant().determinant;

    cert.pass = cert.pivots_nonvanishing && cert.residual_zero &&
                std::all_of(cert.full_rank.begin(), cert.full_rank.end(),
                            [](const auto& kv) { return kv.second.full_column_rank(); }) &&
                (!cert.determinant || nonnegative_integer_roots(*cert.determinant).empty());
    return cert;
}

DeterminantReport relation_determinant() {
    DeterminantReport rep;
    const auto ids = geometric_relations(RamificationProfile::P3);
    std::vector<ChowElement> rels;
    for (LemmaId id : ids) {
        rels.push_back(verify_relation(id).computed);
        rep.rows.push_back(to_string(id));
    }
    const SpaceContext ctx = build_space(SpaceId::X3);
    const auto basis = monomial_basis(*ctx.presentation, 1);
    for (const auto& e : basis) rep.columns.push_back(monomial_name(*ctx.presentation, e));
    rep.matrix = coefficient_matrix(rels, 1, basis);
    rep.determinant = determinant(rep.matrix);
    rep.nonnegative_roots = nonnegative_integer_roots(rep.determinant);
    return rep;
}

}  // namespace chowkit
