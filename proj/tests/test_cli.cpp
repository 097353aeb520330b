#include <doctest.h>

#include "chowkit/cli.hpp"
#include "chowkit/report.hpp"

#include <sstream>

using namespace chowkit;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    args.insert(args.begin(), "chowkit");
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("g value lists") {
    CHECK(cli::parse_g_values("symbolic").empty());
    CHECK(cli::parse_g_values("4") == std::vector<long>{4});
    CHECK(cli::parse_g_values("0,2,7") == std::vector<long>{0, 2, 7});
    CHECK(cli::parse_g_values("0..3") == std::vector<long>{0, 1, 2, 3});
    CHECK_THROWS_AS(cli::parse_g_values("-1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_g_values("3..1"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_g_values("x"), std::invalid_argument);
}

TEST_CASE("verify command") {
    const auto all = run({"verify", "--g", "symbolic", "--lemma", "all"});
    CHECK(all.code == 0);
    const auto one = run({"verify", "--g", "4", "--lemma", "REL-111-DELTA"});
    CHECK(one.code == 0);
    CHECK(one.out.find("zeta_p + zeta_q - 6*z - a1") != std::string::npos);
    CHECK(run({"verify", "--g", "symbolic", "--lemma", "NOPE"}).code == 2);
    CHECK(run({"verify", "--g", "banana"}).code == 2);
    const auto json = run({"verify", "--format", "json"});
    CHECK(json.code == 0);
    const Report r = parse_report(json.out);
    CHECK(r.verdicts.size() == 9);
    CHECK(r.chain.has_value());
    CHECK(r.overall_pass());
}

TEST_CASE("strata command") {
    CHECK(run({"strata", "--g", "0"}).code == 0);
    CHECK(run({"strata", "--g", "12", "--oracle"}).code == 0);
    CHECK(run({"strata", "--g", "31", "--oracle"}).code == 2);
    CHECK(run({"strata"}).code == 2);
    const auto d7 = run({"strata", "--g", "4", "--j", "7"});
    CHECK(d7.code == 0);
    CHECK(d7.out.find("D7 (2,1): H(3;2;(2,1)) x H(2,1;2,0;(2),(1)) [trivial]") != std::string::npos);
}

TEST_CASE("det and jet commands") {
    const auto det = run({"det"});
    CHECK(det.code == 0);
    CHECK(det.out.find("no roots at integers g >= 0") != std::string::npos);
    const auto jet = run({"jet", "--m", "2", "--n", "2", "--rows", "3p3q"});
    CHECK(jet.code == 0);
    CHECK(jet.out.find("rank 6") != std::string::npos);
    CHECK(run({"jet", "--m", "2", "--n", "4", "--rows", "bogus"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("report JSON round trip") {
    for (const Report& r : {cli::build_verify_report({}, "all"), cli::build_verify_report({0, 3}, "all"),
                            cli::build_strata_report(4, true, 0), cli::build_determinant_report()}) {
        const std::string text = serialize(r);
        const Report back = parse_report(text);
        CHECK(back == r);
        CHECK(serialize(back) == text);
    }
    CHECK_THROWS(parse_report("{\"schema-version\": 99}"));
    CHECK_THROWS(parse_report("not json"));
}
