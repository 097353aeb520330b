#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace chowkit {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

struct VerdictSummary {
    std::string id;
    /// Empty in symbolic mode.
    std::optional<long> g;
    bool pass = false;
    std::string computed;
    std::string expected;

    friend bool operator==(const VerdictSummary&, const VerdictSummary&) = default;
};

struct ChainStage {
    std::string name;
    std::string cls;

    friend bool operator==(const ChainStage&, const ChainStage&) = default;
};

struct ChainSummary {
    bool pass = false;
    std::optional<std::string> failed_stage;
    std::string message;
    std::vector<ChainStage> stages;

    friend bool operator==(const ChainSummary&, const ChainSummary&) = default;
};

struct FactorSummary {
    std::vector<int> degrees;
    std::vector<int> genera;
    std::vector<std::vector<int>> profiles;

    friend bool operator==(const FactorSummary&, const FactorSummary&) = default;
};

struct StratumSummary {
    int j = 0;
    std::vector<int> node_profile;
    FactorSummary side1;
    FactorSummary side2;
    std::string quotient_group;
    std::string text;

    friend bool operator==(const StratumSummary&, const StratumSummary&) = default;
};

struct StrataSummary {
    int g = 0;
    std::vector<StratumSummary> strata;
    /// Set when the oracle was run.
    std::optional<bool> oracle_agrees;

    friend bool operator==(const StrataSummary&, const StrataSummary&) = default;
};

struct DeterminantSummary {
    std::string polynomial;
    std::vector<long> nonnegative_roots;
    std::string root_report;
    std::vector<std::string> rows;
    std::vector<std::string> columns;

    friend bool operator==(const DeterminantSummary&, const DeterminantSummary&) = default;
};

struct Report {
    std::string tool_version = kToolVersion;
    /// "symbolic" or "sampled"
    std::string mode = "symbolic";
    std::vector<long> g_values;
    std::vector<VerdictSummary> verdicts;
    std::optional<ChainSummary> chain;
    std::optional<StrataSummary> strata;
    std::optional<DeterminantSummary> determinant;

    [[nodiscard]] bool overall_pass() const;

    friend bool operator==(const Report&, const Report&) = default;
};

nlohmann::ordered_json to_json(const Report& r);
/// Throws nlohmann::json::exception or std::invalid_argument on malformed input.
Report report_from_json(const nlohmann::json& j);
/// Pretty-printed JSON, newline-terminated; byte-stable for equal reports.
std::string serialize(const Report& r);
Report parse_report(const std::string& text);

}  // namespace chowkit
