#pragma once

#include "chowkit/rational.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chowkit {

/// E = O(m) + O(n) on P^1 with m <= n; the genus is m + n - 2.
struct SplittingType {
    int m = 0;
    int n = 0;

    SplittingType() = default;
    SplittingType(int m_, int n_);

    [[nodiscard]] int genus() const { return m + n - 2; }
    friend bool operator==(const SplittingType&, const SplittingType&) = default;
};

/// Every splitting type with m + n = g0 + 2.
std::vector<SplittingType> splitting_types(int g0);

/// Degrees [2m-n, m, n, 2n-m] of Sym^3 E (x) det E^dual.
std::array<int, 4> splitting_sym3(const SplittingType& st);

/// (h0, h1) of O(d) on P^1.
std::pair<int, int> p1_cohomology(int d);

/// Sym^3 E (x) det E^dual is globally generated, i.e. 2m - n >= 0.
bool in_locus_B(const SplittingType& st);

struct PointSpec {
    Rational x;
    /// Affine coordinate along the fiber (ignored on the directrix).
    Rational y;
    bool on_directrix = false;
};

struct JetSpec {
    int order_p = 3;
    int order_q = 3;
    PointSpec p{Rational(0), Rational(0), false};
    PointSpec q{Rational(1), Rational(1), false};
    bool same_fiber = false;
    /// Retry q's y with 2, 3, 5 and report the maximum rank.
    bool y_fallback = true;
};

/// Parses "3p3q", "1p1q", "2p", "3p0q". Throws std::invalid_argument.
JetSpec parse_row_spec(std::string_view text);

struct JetResult {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t rank = 0;
    Rational y_used;
};

using RationalMatrix = std::vector<std::vector<Rational>>;

/// Evaluation matrix of the jets in `spec` on the coefficient space of
/// (a, b, c, d) in f = a Y1^3 + b Y1^2 Y0 + c Y1 Y0^2 + d Y0^3.
RationalMatrix jet_matrix(const SplittingType& st, const JetSpec& spec);

JetResult jet_rank(const SplittingType& st, const JetSpec& spec);

}  // namespace chowkit
