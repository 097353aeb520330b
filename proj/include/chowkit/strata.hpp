#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace chowkit {

using Partition = std::vector<int>;

/// One side of a codimension-1 stratum: the cover restricted to one target
/// component, one entry per source component (degree, genus, node profile).
struct FactorSpace {
    Partition degrees;
    std::vector<int> genera;
    std::vector<Partition> profiles;

    [[nodiscard]] bool connected() const { return degrees.size() == 1; }
    /// "H(3;2;(2,1))", "H(2,1;2,0;(2),(1))"
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] int genus_sum() const;

    friend auto operator<=>(const FactorSpace&, const FactorSpace&) = default;
};

enum class QuotientGroup { Trivial, Z2, S3, S3xZ2 };

std::string to_string(QuotientGroup q);

struct StratumDescriptor {
    int genus_total = 0;
    int j = 0;
    Partition node_profile;
    FactorSpace side1;
    FactorSpace side2;
    QuotientGroup quotient_group = QuotientGroup::Trivial;

    /// "D7 (2,1): H(3;2;(2,1)) x H(2,1;2,0;(2),(1)) [trivial]"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const StratumDescriptor&, const StratumDescriptor&) = default;
};

/// Canonical total order: j, node profile, side1, side2.
bool canonical_less(const StratumDescriptor& a, const StratumDescriptor& b);

/// b = 2g + 4 simple branch points.
int branch_count(int g);

/// Sum over components of 2 g_i - 2 + 2 k_i - sum (mu - 1); admissible iff >= 2.
int stability_value(const FactorSpace& f);

/// Solves 2g' - 2 = -2k + j + contribution; nullopt unless g' is a nonnegative integer.
std::optional<int> rh_genus(int j, int component_degree, int node_contribution);

/// Number of source components of a stratum.
int component_count(const StratumDescriptor& d);
/// Arithmetic genus of the glued source: g1 + g2 + l - V + 1.
int glued_genus(const StratumDescriptor& d);

QuotientGroup quotient_group(const Partition& node_profile, const FactorSpace& side1, const FactorSpace& side2);

/// Puts j <= b - j (swapping sides), orders mirror sides when j = b - j,
/// and sorts each split side by descending degree.
StratumDescriptor canonicalize(StratumDescriptor d);

/// Strata over D_j for one canonical j in 2..b/2, in canonical order.
std::vector<StratumDescriptor> strata_for_j(int g, int j);
std::vector<StratumDescriptor> enumerate_codim1(int g);

/// The same stratum written with `j` branch points on side 1 (j or b - j).
StratumDescriptor oriented(const StratumDescriptor& d, int j);

/// Strata over the divisor D_j = D_{b-j}, each oriented so side 1 carries j.
std::vector<StratumDescriptor> strata_over(const std::vector<StratumDescriptor>& all, int j);

class OracleGuardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr int kOracleGenusLimit = 30;

/// Independent brute force over all configurations; throws OracleGuardError for g > 30.
std::vector<StratumDescriptor> oracle_enumerate(int g);

/// Which entry of the five factor families a side belongs to, or nullopt.
/// Families: H_{3,g'}((3)), H_{3,g'}((2,1)), H_{3,g'}((1,1,1)) with g' >= 0,
/// H_{(2,1),(g',0)}((2),(1)) with g' >= 1, H_{(2,1),(g',0)}((1,1),(1)) with g' >= 0,
/// always g' <= g.
std::optional<int> factor_family(const FactorSpace& f, int g);

}  // namespace chowkit
