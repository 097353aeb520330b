#pragma once

#include "chowkit/param_poly.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chowkit {

/// Graded generator of a Chow ring presentation; degree is the codimension.
struct Generator {
    std::string name;
    int degree = 1;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector indexed like RingPresentation::generators().
using Exponents = std::vector<std::uint16_t>;
/// Raw (not necessarily reduced) sparse polynomial over Q[g].
using TermMap = std::map<Exponents, ParamPoly>;

class PresentationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Which rewrite to fire when several generators of a term exceed exponent 1.
/// An empty priority means the presentation's default order. When `rng` is
/// set, the generator and the next pending term are picked at random instead;
/// tests use this to exercise confluence.
struct RewriteStrategy {
    std::vector<std::size_t> priority;
    std::mt19937_64* rng = nullptr;
};

class RingPresentation;
using PresentationPtr = std::shared_ptr<const RingPresentation>;

/// Generators plus square-rewrite rules x^2 -> rhs. Immutable once built;
/// share it through PresentationPtr.
class RingPresentation {
public:
    static constexpr int kDefaultTruncation = 4;

    [[nodiscard]] const std::vector<Generator>& generators() const { return generators_; }
    [[nodiscard]] std::size_t size() const { return generators_.size(); }
    [[nodiscard]] std::optional<std::size_t> find(std::string_view name) const;
    /// Throws PresentationError for an unknown name.
    [[nodiscard]] std::size_t index(std::string_view name) const;
    [[nodiscard]] bool has_rule(std::size_t gen) const { return rules_[gen].has_value(); }
    [[nodiscard]] const TermMap& rule(std::size_t gen) const;
    [[nodiscard]] bool has_rules() const;
    [[nodiscard]] int truncation_degree() const { return truncation_; }
    [[nodiscard]] const std::vector<std::size_t>& rewrite_priority() const { return priority_; }
    /// Rule-bearing generators in generator-list order; the termination measure.
    [[nodiscard]] const std::vector<std::size_t>& measure_order() const { return measure_order_; }

    [[nodiscard]] int weighted_degree(const Exponents& e) const;
    [[nodiscard]] std::vector<int> measure(const Exponents& e) const;
    [[nodiscard]] bool is_normal(const Exponents& e) const;

    /// Rewrites to normal form (every rule generator at exponent <= 1) and
    /// drops zero coefficients.
    [[nodiscard]] TermMap reduce(TermMap raw, const RewriteStrategy& strategy = {}) const;

    /// Same generators, no rules, same truncation.
    [[nodiscard]] PresentationPtr free_variant() const;

    /// Canonical monomial order: weighted degree descending, then graded
    /// reverse lexicographic in generator-list order. Returns true if a < b
    /// in printing order (a printed first).
    [[nodiscard]] bool canonical_before(const Exponents& a, const Exponents& b) const;
    /// Generator indices sorted by name; the factor order inside a printed monomial.
    [[nodiscard]] const std::vector<std::size_t>& print_order() const { return print_order_; }

    friend bool operator==(const RingPresentation& a, const RingPresentation& b);

private:
    friend PresentationPtr make_presentation_from_terms(std::vector<Generator>,
                                                        std::vector<std::pair<std::string, TermMap>>,
                                                        std::optional<int>, std::vector<std::string>);
    RingPresentation() = default;

    std::vector<Generator> generators_;
    std::vector<std::optional<TermMap>> rules_;
    std::vector<std::size_t> priority_;
    std::vector<std::size_t> measure_order_;
    std::vector<std::size_t> print_order_;
    int truncation_ = kDefaultTruncation;
};

/// A square rule with its right-hand side written in the canonical text format.
struct SquareRuleSpec {
    std::string generator;
    std::string rhs;
};

/// Validates and builds a presentation.
///
/// Rejects duplicate or reserved names ("g" is the genus parameter),
/// non-positive degrees, rules on unknown generators, right-hand sides that
/// mention unknown symbols, are not homogeneous of degree 2*deg(x), keep
/// x at exponent >= 2, or fail to decrease the lexicographic measure over
/// the rule-bearing generators. `rewrite_priority` lists rule generators in
/// firing order; omitted ones follow in generator-list order.
PresentationPtr make_presentation(std::vector<Generator> generators, std::vector<SquareRuleSpec> rules,
                                  std::optional<int> truncation = std::nullopt,
                                  std::vector<std::string> rewrite_priority = {});

PresentationPtr make_presentation_from_terms(std::vector<Generator> generators,
                                             std::vector<std::pair<std::string, TermMap>> rules,
                                             std::optional<int> truncation = std::nullopt,
                                             std::vector<std::string> rewrite_priority = {});

/// Truncation degree from CHOWKIT_TRUNCATION, else 4. Throws
/// std::invalid_argument when the variable is set but not a positive integer.
int default_truncation_degree();

namespace terms {

void add_into(TermMap& acc, const Exponents& e, const ParamPoly& c);
TermMap add(const TermMap& a, const TermMap& b);
TermMap scale(const TermMap& a, const ParamPoly& c);
/// Product without any rewriting.
TermMap multiply_free(const TermMap& a, const TermMap& b);
TermMap constant(std::size_t n_generators, const ParamPoly& c);
TermMap generator(std::size_t n_generators, std::size_t index);

/// Parses the canonical text format against a generator list, with no
/// rewriting: sums of products of rationals, g, g^k, generator names,
/// generator powers and parenthesized subexpressions.
/// Throws PresentationError on syntax errors or unknown symbols.
TermMap parse(std::string_view text, const std::vector<Generator>& generators);

}  // namespace terms

}  // namespace chowkit
