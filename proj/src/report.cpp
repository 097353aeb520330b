#include "chowkit/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace chowkit {

using nlohmann::json;
using nlohmann::ordered_json;

bool Report::overall_pass() const {
    const bool verdicts_ok = std::all_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.pass; });
    const bool chain_ok = !chain || chain->pass;
    const bool strata_ok = !strata || !strata->oracle_agrees || *strata->oracle_agrees;
    return verdicts_ok && chain_ok && strata_ok;
}

namespace {

ordered_json factor_json(const FactorSummary& f) {
    ordered_json j;
    j["degrees"] = f.degrees;
    j["genera"] = f.genera;
    j["profiles"] = f.profiles;
    return j;
}

FactorSummary factor_from(const json& j) {
    return {j.at("degrees").get<std::vector<int>>(), j.at("genera").get<std::vector<int>>(),
            j.at("profiles").get<std::vector<std::vector<int>>>()};
}

}  // namespace

ordered_json to_json(const Report& r) {
    ordered_json j;
    j["schema-version"] = kReportSchemaVersion;
    j["tool-version"] = r.tool_version;
    j["mode"] = r.mode;
    j["g-values"] = r.g_values;
    j["verdicts"] = ordered_json::array();
    for (const auto& v : r.verdicts) {
        ordered_json e;
        e["id"] = v.id;
        e["g"] = v.g ? ordered_json(*v.g) : ordered_json(nullptr);
        e["pass"] = v.pass;
        e["computed"] = v.computed;
        e["expected"] = v.expected;
        j["verdicts"].push_back(std::move(e));
    }
    if (r.chain) {
        ordered_json c;
        c["pass"] = r.chain->pass;
        c["failed-stage"] = r.chain->failed_stage ? ordered_json(*r.chain->failed_stage) : ordered_json(nullptr);
        c["message"] = r.chain->message;
        c["stages"] = ordered_json::array();
        for (const auto& s : r.chain->stages) c["stages"].push_back({{"name", s.name}, {"class", s.cls}});
        j["chain"] = std::move(c);
    } else {
        j["chain"] = nullptr;
    }
    if (r.strata) {
        ordered_json s;
        s["g"] = r.strata->g;
        s["oracle-agrees"] = r.strata->oracle_agrees ? ordered_json(*r.strata->oracle_agrees) : ordered_json(nullptr);
        s["descriptors"] = ordered_json::array();
        for (const auto& d : r.strata->strata) {
            ordered_json e;
            e["j"] = d.j;
            e["node-profile"] = d.node_profile;
            e["side1"] = factor_json(d.side1);
            e["side2"] = factor_json(d.side2);
            e["quotient-group"] = d.quotient_group;
            e["text"] = d.text;
            s["descriptors"].push_back(std::move(e));
        }
        j["strata"] = std::move(s);
    } else {
        j["strata"] = nullptr;
    }
    if (r.determinant) {
        ordered_json d;
        d["polynomial"] = r.determinant->polynomial;
        d["nonnegative-roots"] = r.determinant->nonnegative_roots;
        d["root-report"] = r.determinant->root_report;
        d["rows"] = r.determinant->rows;
        d["columns"] = r.determinant->columns;
        j["determinant"] = std::move(d);
    } else {
        j["determinant"] = nullptr;
    }
    j["overall-pass"] = r.overall_pass();
    return j;
}

Report report_from_json(const json& j) {
    if (j.at("schema-version").get<int>() != kReportSchemaVersion)
        throw std::invalid_argument("unsupported report schema version");
    Report r;
    r.tool_version = j.at("tool-version").get<std::string>();
    r.mode = j.at("mode").get<std::string>();
    r.g_values = j.at("g-values").get<std::vector<long>>();
    for (const auto& e : j.at("verdicts")) {
        VerdictSummary v;
        v.id = e.at("id").get<std::string>();
        if (!e.at("g").is_null()) v.g = e.at("g").get<long>();
        v.pass = e.at("pass").get<bool>();
        v.computed = e.at("computed").get<std::string>();
        v.expected = e.at("expected").get<std::string>();
        r.verdicts.push_back(std::move(v));
    }
    if (!j.at("chain").is_null()) {
        const auto& c = j.at("chain");
        ChainSummary s;
        s.pass = c.at("pass").get<bool>();
        if (!c.at("failed-stage").is_null()) s.failed_stage = c.at("failed-stage").get<std::string>();
        s.message = c.at("message").get<std::string>();
        for (const auto& st : c.at("stages"))
            s.stages.push_back({st.at("name").get<std::string>(), st.at("class").get<std::string>()});
        r.chain = std::move(s);
    }
    if (!j.at("strata").is_null()) {
        const auto& s = j.at("strata");
        StrataSummary out;
        out.g = s.at("g").get<int>();
        if (!s.at("oracle-agrees").is_null()) out.oracle_agrees = s.at("oracle-agrees").get<bool>();
        for (const auto& e : s.at("descriptors")) {
            out.strata.push_back({e.at("j").get<int>(), e.at("node-profile").get<std::vector<int>>(),
                                  factor_from(e.at("side1")), factor_from(e.at("side2")),
                                  e.at("quotient-group").get<std::string>(), e.at("text").get<std::string>()});
        }
        r.strata = std::move(out);
    }
    if (!j.at("determinant").is_null()) {
        const auto& d = j.at("determinant");
        r.determinant = DeterminantSummary{d.at("polynomial").get<std::string>(),
                                           d.at("nonnegative-roots").get<std::vector<long>>(),
                                           d.at("root-report").get<std::string>(),
                                           d.at("rows").get<std::vector<std::string>>(),
                                           d.at("columns").get<std::vector<std::string>>()};
    }
    if (j.at("overall-pass").get<bool>() != r.overall_pass())
        throw std::invalid_argument("overall-pass disagrees with the report contents");
    return r;
}

std::string serialize(const Report& r) { return to_json(r).dump(2) + "\n"; }

Report parse_report(const std::string& text) { return report_from_json(json::parse(text)); }

}  // namespace chowkit
