#pragma once

#include "chowkit/bundle.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace chowkit {

enum class SpaceId { B, P, PE, X111, X3, Xtilde3 };

std::string to_string(SpaceId id);
/// Throws std::invalid_argument for an unknown name.
SpaceId parse_space_id(std::string_view name);

/// A space of the tower B <- P <- PE with its presentation and named classes.
/// Two-point spaces (X111, Xtilde3) carry zeta_p and zeta_q and name their
/// point-dependent classes with _p/_q suffixes.
struct SpaceContext {
    SpaceId id = SpaceId::B;
    PresentationPtr presentation;
    std::map<std::string, ChowElement> named_classes;

    /// Throws std::out_of_range naming the missing class.
    [[nodiscard]] const ChowElement& cls(const std::string& name) const;
    [[nodiscard]] bool has_class(const std::string& name) const { return named_classes.count(name) != 0; }
    [[nodiscard]] ChowElement gen(std::string_view name) const;
    [[nodiscard]] ChowElement parse(std::string_view text) const;
    [[nodiscard]] ChowElement one() const { return ChowElement::constant(presentation, ParamPoly(1)); }
    [[nodiscard]] std::vector<std::string> zetas() const;
};

/// Truncation defaults to default_truncation_degree().
SpaceContext build_space(SpaceId id, std::optional<int> truncation = std::nullopt);

enum class PushMap { gamma, pi, gamma_then_pi, eta_p };

std::string to_string(PushMap m);

class PushforwardError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pushforward along a map out of ctx's space.
///  gamma:          extract `zeta` (default zeta_p), landing in P for one-point
///                  spaces and in PE for two-point spaces (the surviving zeta
///                  is renamed zeta_p).
///  pi:             extract z, landing in B; the class must be zeta-free.
///  gamma_then_pi:  one-point spaces only.
///  eta_p:          forget the q point; the class must be zeta_q-free.
ChowElement pushforward(const SpaceContext& ctx, const ChowElement& e, PushMap along,
                        std::string_view zeta = "zeta_p");

/// Pullback by a generator-renaming injection.
ChowElement pullback(const ChowElement& e, const SpaceContext& target);

/// Space reached by a pushforward, for building target contexts.
SpaceId pushforward_target(SpaceId from, PushMap along);

}  // namespace chowkit
