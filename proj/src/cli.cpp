#include "chowkit/cli.hpp"

#include "chowkit/splitting.hpp"
#include "chowkit/strata.hpp"
#include "chowkit/verify.hpp"

#include <CLI11.hpp>

#include <map>
#include <ostream>

namespace chowkit::cli {

namespace {

long parse_nonnegative(const std::string& text) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
    }
    if (used != text.size() || v < 0) throw std::invalid_argument("expected a nonnegative integer, got '" + text + "'");
    return v;
}

std::string root_report(const std::vector<long>& roots) {
    if (roots.empty()) return "no roots at integers g >= 0";
    std::string out = "roots at g =";
    for (long r : roots) out += " " + std::to_string(r);
    return out;
}

FactorSummary summarize(const FactorSpace& f) { return {f.degrees, f.genera, f.profiles}; }

StratumSummary summarize(const StratumDescriptor& d) {
    return {d.j, d.node_profile, summarize(d.side1), summarize(d.side2), to_string(d.quotient_group), d.to_string()};
}

void print_text(const Report& r, std::ostream& out) {
    for (const auto& v : r.verdicts) {
        out << (v.pass ? "PASS " : "FAIL ") << v.id;
        if (v.g) out << " g=" << *v.g;
        out << ": " << v.computed;
        if (!v.pass) out << " (expected " << v.expected << ")";
        out << "\n";
    }
    if (r.chain) {
        for (const auto& s : r.chain->stages) out << "chain " << s.name << ": " << s.cls << "\n";
        out << "chain " << (r.chain->pass ? "PASS" : "FAIL at " + r.chain->failed_stage.value_or("?")) << "\n";
    }
    if (r.strata) {
        for (const auto& d : r.strata->strata) out << d.text << "\n";
        out << r.strata->strata.size() << " strata for g=" << r.strata->g << "\n";
        if (r.strata->oracle_agrees) out << "oracle " << (*r.strata->oracle_agrees ? "agrees" : "DISAGREES") << "\n";
    }
    if (r.determinant) {
        out << "det = " << r.determinant->polynomial << "\n";
        out << r.determinant->root_report << "\n";
    }
    out << "overall: " << (r.overall_pass() ? "PASS" : "FAIL") << "\n";
}

void emit(const Report& r, const std::string& format, std::ostream& out) {
    if (format == "json")
        out << serialize(r);
    else
        print_text(r, out);
}

}  // namespace

std::vector<long> parse_g_values(const std::string& text) {
    if (text == "symbolic") return {};
    std::vector<long> out;
    const auto range = text.find("..");
    if (range != std::string::npos) {
        const long lo = parse_nonnegative(text.substr(0, range));
        const long hi = parse_nonnegative(text.substr(range + 2));
        if (hi < lo) throw std::invalid_argument("empty g range '" + text + "'");
        for (long g = lo; g <= hi; ++g) out.push_back(g);
        return out;
    }
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(parse_nonnegative(text.substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

Report build_verify_report(const std::vector<long>& g_values, const std::string& lemma) {
    std::vector<LemmaId> ids;
    if (lemma == "all")
        ids = all_lemmas();
    else
        ids.push_back(parse_lemma_id(lemma));

    Report r;
    r.mode = g_values.empty() ? "symbolic" : "sampled";
    r.g_values = g_values;
    for (LemmaId id : ids) {
        const Verdict v = verify_relation(id);
        if (g_values.empty()) {
            r.verdicts.push_back({to_string(id), std::nullopt, v.pass, v.computed.to_string(), v.expected.to_string()});
            continue;
        }
        for (long g0 : g_values) {
            const ChowElement c = v.computed.evaluate_parameter(g0);
            const ChowElement e = v.expected.evaluate_parameter(g0);
            r.verdicts.push_back({to_string(id), g0, (c - e).is_zero(), c.to_string(), e.to_string()});
        }
    }
    if (lemma == "all" || lemma == "REL-3-TT") {
        ChainSummary chain;
        try {
            const ChainReport c = tt_chain();
            chain.pass = c.pass;
            chain.stages = {{"c3_free", c.c3_free.to_string()},       {"c3_reduced", c.c3_reduced.to_string()},
                            {"push_gamma", c.push_gamma.to_string()}, {"push_pi", c.push_pi.to_string()},
                            {"alpha_Y", c.alpha_Y.to_string()},       {"tt_class", c.tt_class.to_string()}};
        } catch (const ChainError& e) {
            chain.pass = false;
            chain.failed_stage = e.stage();
            chain.message = e.what();
        }
        r.chain = std::move(chain);
    }
    return r;
}

Report build_strata_report(int g, bool oracle, int orient_j) {
    Report r;
    r.mode = "sampled";
    r.g_values = {g};
    StrataSummary s;
    s.g = g;
    const auto all = enumerate_codim1(g);
    const auto shown = orient_j > 0 ? strata_over(all, orient_j) : all;
    for (const auto& d : shown) s.strata.push_back(summarize(d));
    if (oracle) s.oracle_agrees = (oracle_enumerate(g) == all);
    r.strata = std::move(s);
    return r;
}

Report build_determinant_report() {
    const DeterminantReport d = relation_determinant();
    Report r;
    r.determinant = DeterminantSummary{d.determinant.to_string(), d.nonnegative_roots, root_report(d.nonnegative_roots),
                                       d.rows, d.columns};
    return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Chow ring verification for degree-3 Hurwitz spaces", "chowkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", kToolVersion);

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    };

    auto* verify = app.add_subcommand("verify", "re-derive the relation classes");
    std::string g_text = "symbolic";
    std::string lemma = "all";
    verify->add_option("--g", g_text, "symbolic, N, a,b,c or a..b");
    verify->add_option("--lemma", lemma, "lemma id or all");
    add_format(verify);

    auto* strata = app.add_subcommand("strata", "enumerate codimension-1 boundary strata");
    long strata_g = 0;
    bool oracle = false;
    int orient_j = 0;
    strata->add_option("--g", strata_g, "genus")->required()->check(CLI::NonNegativeNumber);
    strata->add_flag("--oracle", oracle, "cross-check against the brute-force oracle");
    strata->add_option("--j", orient_j, "only strata over D_j, written with j branch points on side 1");
    add_format(strata);

    auto* det = app.add_subcommand("det", "relation determinant for mu = (3)");
    add_format(det);

    auto* jet = app.add_subcommand("jet", "rank of a fiberwise jet evaluation map");
    int m = 0;
    int n = 0;
    std::string rows = "3p3q";
    std::string y1 = "1";
    std::string qx = "1";
    bool p_directrix = false;
    bool q_directrix = false;
    bool same_fiber = false;
    jet->add_option("--m", m, "smaller splitting degree")->required();
    jet->add_option("--n", n, "larger splitting degree")->required();
    jet->add_option("--rows", rows, "row spec such as 3p3q or 1p1q");
    jet->add_option("--y1", y1, "fiber coordinate of q (rational)");
    jet->add_option("--qx", qx, "base coordinate of q (rational)");
    jet->add_flag("--p-directrix", p_directrix, "p on the directrix");
    jet->add_flag("--q-directrix", q_directrix, "q on the directrix");
    jet->add_flag("--same-fiber", same_fiber, "allow q on the fiber of p");
    add_format(jet);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (*verify) {
            std::vector<long> gs;
            try {
                gs = parse_g_values(g_text);
                if (lemma != "all") (void)parse_lemma_id(lemma);
            } catch (const std::invalid_argument& e) {
                err << "chowkit verify: " << e.what() << "\n";
                return kUsage;
            }
            const Report r = build_verify_report(gs, lemma);
            emit(r, format, out);
            if (r.chain && !r.chain->pass) err << "chowkit verify: " << r.chain->message << "\n";
            return r.overall_pass() ? kPass : kFailure;
        }
        if (*strata) {
            if (oracle && strata_g > kOracleGenusLimit) {
                err << "chowkit strata: --oracle is limited to g <= " << kOracleGenusLimit << "\n";
                return kUsage;
            }
            const int b = branch_count(static_cast<int>(strata_g));
            if (orient_j != 0 && (orient_j < 2 || orient_j > b - 2)) {
                err << "chowkit strata: --j must lie in 2.." << b - 2 << "\n";
                return kUsage;
            }
            const Report r = build_strata_report(static_cast<int>(strata_g), oracle, orient_j);
            emit(r, format, out);
            return r.overall_pass() ? kPass : kFailure;
        }
        if (*det) {
            const Report r = build_determinant_report();
            emit(r, format, out);
            return r.determinant->nonnegative_roots.empty() ? kPass : kFailure;
        }
        if (*jet) {
            JetSpec spec;
            SplittingType st;
            try {
                spec = parse_row_spec(rows);
                st = SplittingType(m, n);
                spec.q.y = Rational::parse(y1);
                spec.q.x = Rational::parse(qx);
            } catch (const std::invalid_argument& e) {
                err << "chowkit jet: " << e.what() << "\n";
                return kUsage;
            }
            spec.p.on_directrix = p_directrix;
            spec.q.on_directrix = q_directrix;
            spec.same_fiber = same_fiber;
            JetResult res;
            try {
                res = jet_rank(st, spec);
            } catch (const std::invalid_argument& e) {
                err << "chowkit jet: " << e.what() << "\n";
                return kUsage;
            }
            if (format == "json") {
                nlohmann::ordered_json j;
                j["tool-version"] = kToolVersion;
                j["m"] = m;
                j["n"] = n;
                j["genus"] = st.genus();
                j["rows-spec"] = rows;
                j["rows"] = res.rows;
                j["cols"] = res.cols;
                j["rank"] = res.rank;
                j["y1"] = res.y_used.to_string();
                out << j.dump(2) << "\n";
            } else {
                out << "splitting (" << m << "," << n << "), g=" << st.genus() << ", rows " << rows << "\n";
                out << "matrix " << res.rows << "x" << res.cols << ", rank " << res.rank << " (y1=" << res.y_used
                    << ")\n";
            }
            return kPass;
        }
    } catch (const std::exception& e) {
        err << "chowkit: " << e.what() << "\n";
        return kFailure;
    }
    return kUsage;
}

}  // namespace chowkit::cli
