#pragma once

#include "chowkit/presentation.hpp"

#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace chowkit {

class MixedPresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A class in the ring described by a RingPresentation, always in normal form.
class ChowElement {
public:
    /// The zero element.
    explicit ChowElement(PresentationPtr presentation);

    static ChowElement constant(PresentationPtr presentation, const ParamPoly& c);
    static ChowElement generator(PresentationPtr presentation, std::string_view name);
    /// Reduces `raw` to normal form.
    static ChowElement from_terms(PresentationPtr presentation, TermMap raw, const RewriteStrategy& strategy = {});
    /// Parses the canonical text format and reduces.
    static ChowElement parse(PresentationPtr presentation, std::string_view text);

    [[nodiscard]] const PresentationPtr& presentation() const { return pres_; }
    [[nodiscard]] const TermMap& terms() const { return terms_; }
    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] ParamPoly coefficient(const Exponents& e) const;

    /// Highest weighted degree of a term; -1 for zero.
    [[nodiscard]] int max_degree() const;
    /// Zero counts as homogeneous of every degree.
    [[nodiscard]] bool is_homogeneous(int d) const;
    [[nodiscard]] bool is_homogeneous() const;

    [[nodiscard]] ChowElement graded_part(int d) const;
    /// Drops every term of weighted degree above d.
    [[nodiscard]] ChowElement truncated(int d) const;
    [[nodiscard]] ChowElement evaluate_parameter(long g0) const;

    ChowElement& operator+=(const ChowElement& rhs);
    ChowElement& operator-=(const ChowElement& rhs);
    ChowElement& operator*=(const ChowElement& rhs);
    ChowElement& operator*=(const ParamPoly& rhs);

    friend ChowElement operator+(ChowElement a, const ChowElement& b) { return a += b; }
    friend ChowElement operator-(ChowElement a, const ChowElement& b) { return a -= b; }
    friend ChowElement operator*(ChowElement a, const ChowElement& b) { return a *= b; }
    friend ChowElement operator*(ChowElement a, const ParamPoly& c) { return a *= c; }
    friend ChowElement operator*(const ParamPoly& c, ChowElement a) { return a *= c; }
    ChowElement operator-() const;

    [[nodiscard]] ChowElement pow(unsigned exponent) const;
    /// Product under an explicit rewrite strategy (used to probe confluence).
    [[nodiscard]] ChowElement multiply(const ChowElement& rhs, const RewriteStrategy& strategy) const;

    /// Equal presentations (structurally) and identical normal forms.
    friend bool operator==(const ChowElement& a, const ChowElement& b);

    [[nodiscard]] std::string to_string() const;

private:
    void require_same(const ChowElement& rhs, const char* op) const;

    PresentationPtr pres_;
    TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const ChowElement& e);

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

/// Splits e = coeff * gen + remainder where neither part contains gen.
/// Throws PresentationError when gen has no square rule.
std::pair<ChowElement, ChowElement> coefficient_extract(const ChowElement& e, std::string_view gen);

/// Moves e into `target` by generator name and reduces there. Every generator
/// occurring in e must exist in target with the same degree.
ChowElement embed(const ChowElement& e, const PresentationPtr& target);

/// Replaces every occurrence of `gen` by `replacement` (same presentation) and reduces.
ChowElement substitute(const ChowElement& e, std::string_view gen, const ChowElement& replacement);

/// e in the rule-free variant of its presentation (no rewriting at all).
ChowElement free_mode(const ChowElement& e);

}  // namespace chowkit
