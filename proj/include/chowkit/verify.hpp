#pragma once

#include "chowkit/linalg.hpp"
#include "chowkit/tower.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace chowkit {

enum class LemmaId {
    Rel111Delta,
    Rel111RamP,
    Rel111RamQ,
    Rel21Triple,
    Rel21Node,
    Rel3Contact4,
    Rel3Node,
    Rel3DeltaInput,
    Rel3TT,
};

const std::vector<LemmaId>& all_lemmas();
std::string to_string(LemmaId id);
/// Throws std::invalid_argument for an unknown id.
LemmaId parse_lemma_id(std::string_view text);
/// Space the relation lives on.
SpaceId lemma_space(LemmaId id);
/// Expected class in canonical text.
std::string lemma_expected_text(LemmaId id);

struct Verdict {
    LemmaId lemma{};
    ChowElement computed;
    ChowElement expected;
    bool pass = false;
    std::vector<std::pair<std::string, ChowElement>> narrative;
};

Verdict verify_relation(LemmaId id);
/// Same verdict specialized at g = g0 (computed and expected both evaluated).
Verdict verify_relation_at(LemmaId id, long g0);

class ChainError : public std::runtime_error {
public:
    ChainError(std::string stage, const std::string& detail);
    [[nodiscard]] const std::string& stage() const { return stage_; }

private:
    std::string stage_;
};

struct ChainReport {
    ChowElement c3_free;
    ChowElement c3_reduced;
    ChowElement push_gamma;
    ChowElement push_pi;
    ChowElement alpha_Y;
    ChowElement tt_class;
    bool pass = false;
};

/// Runs every stage and throws ChainError naming the first stage whose
/// result disagrees with its expected class.
ChainReport tt_chain();

/// Stage names with expected classes in canonical text, in chain order.
const std::vector<std::pair<std::string, std::string>>& tt_chain_expectations();

enum class RamificationProfile { P111, P21, P3 };

std::string to_string(RamificationProfile mu);
RamificationProfile parse_profile(std::string_view text);

struct SolvedGenerator {
    std::string generator;
    /// generator = sum coefficient * free generator
    std::vector<std::pair<std::string, RatFunc>> combination;
    [[nodiscard]] std::string to_string() const;
};

struct TrivialityCertificate {
    RamificationProfile mu{};
    SpaceId space{};
    std::vector<std::string> relation_names;
    std::vector<std::string> columns;
    /// Geometric relations solved over Q(g) for the leading generators.
    std::vector<SolvedGenerator> solutions;
    std::vector<ParamPoly> pivot_polynomials;
    bool pivots_nonvanishing = false;
    bool residual_zero = false;
    /// Full relation set (geometric relations plus base generators) per degree.
    std::vector<std::pair<int, RankReport>> full_rank;
    std::optional<ParamPoly> determinant;
    bool pass = false;
};

TrivialityCertificate triviality_check(RamificationProfile mu);

struct DeterminantReport {
    PolyMatrix matrix;
    ParamPoly determinant;
    std::vector<long> nonnegative_roots;
    std::vector<std::string> rows;
    std::vector<std::string> columns;
};

/// Degree-1 relation matrix for mu = (3) in row order
/// (REL-3-DELTA-INPUT, REL-3-CONTACT4, REL-3-NODE, REL-3-TT) and columns
/// (zeta_p, z, a1, a2p).
DeterminantReport relation_determinant();

}  // namespace chowkit
