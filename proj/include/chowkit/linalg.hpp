#pragma once

#include "chowkit/chow_element.hpp"

#include <string>
#include <vector>

namespace chowkit {

using PolyMatrix = std::vector<std::vector<ParamPoly>>;
using RatMatrix = std::vector<std::vector<Rational>>;

/// Element of Q(g): num/den with gcd(num, den) = 1 and den monic.
class RatFunc {
public:
    RatFunc() = default;
    RatFunc(ParamPoly num);  // NOLINT(google-explicit-constructor)
    RatFunc(ParamPoly num, ParamPoly den);

    [[nodiscard]] const ParamPoly& num() const { return num_; }
    [[nodiscard]] const ParamPoly& den() const { return den_; }
    [[nodiscard]] bool is_zero() const { return num_.is_zero(); }
    [[nodiscard]] bool is_polynomial() const { return den_.is_one(); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc operator-() const { return RatFunc(-num_, den_); }
    friend bool operator==(const RatFunc&, const RatFunc&) = default;

    /// "-1/(g+1)", "g+2", "3/(2*g+1)" -- the g-polynomial denominator is made monic.
    [[nodiscard]] std::string to_string() const;

private:
    ParamPoly num_;
    ParamPoly den_{1};
};

/// Normal-form monomials of weighted degree d, in canonical printing order.
std::vector<Exponents> monomial_basis(const RingPresentation& pres, int d);

/// Row i holds the coefficients of relations[i] against `basis`.
/// Throws std::invalid_argument if a relation is not homogeneous of degree d
/// or relations mix presentations.
PolyMatrix coefficient_matrix(const std::vector<ChowElement>& relations, int d, const std::vector<Exponents>& basis);

RatMatrix evaluate_matrix(const PolyMatrix& m, long g0);

std::size_t rank(RatMatrix m);
Rational determinant(RatMatrix m);
/// Fraction-free (Bareiss) determinant over Q[g].
ParamPoly determinant(PolyMatrix m);
/// Rank over the field Q(g), by fraction-free elimination.
std::size_t generic_rank(PolyMatrix m);

struct RankReport {
    std::size_t rows = 0;
    std::size_t cols = 0;
    /// Rank over Q(g).
    std::size_t generic_rank = 0;
    /// A nonzero generic_rank x generic_rank minor. Away from its roots the
    /// specialized rank equals generic_rank.
    ParamPoly certificate_minor;
    /// Nonnegative integer roots of certificate_minor, each checked by exact evaluation.
    std::vector<long> candidate_points;
    /// The candidates where the specialized rank really falls below generic_rank.
    std::vector<long> drop_points;

    [[nodiscard]] bool uniform() const { return drop_points.empty(); }
    [[nodiscard]] bool full_column_rank() const { return generic_rank == cols && uniform(); }
};

RankReport rank_report(const PolyMatrix& m);

struct SliceRank {
    std::vector<Exponents> basis;
    PolyMatrix matrix;
    RankReport report;
};

SliceRank degree_slice_rank(const std::vector<ChowElement>& relations, int d);
std::size_t degree_slice_rank_at(const std::vector<ChowElement>& relations, int d, long g0);

/// Reduced row echelon form over Q(g).
struct Rref {
    std::vector<std::vector<RatFunc>> rows;  // nonzero rows only
    std::vector<std::size_t> pivot_columns;
    /// Every polynomial divided by during elimination (numerators of pivots).
    std::vector<ParamPoly> divisors;
};

Rref rref(const PolyMatrix& m);

std::string matrix_to_string(const PolyMatrix& m);

}  // namespace chowkit
