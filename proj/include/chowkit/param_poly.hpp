#pragma once

#include "chowkit/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace chowkit {

/// Univariate polynomial in the genus parameter g with exact rational
/// coefficients. Zero coefficients are never stored.
class ParamPoly {
public:
    using Terms = std::map<unsigned, Rational>;

    ParamPoly() = default;
    ParamPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
    ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

    /// The monomial c * g^exponent.
    static ParamPoly monomial(const Rational& c, unsigned exponent);
    /// The polynomial g.
    static ParamPoly g() { return monomial(Rational(1), 1); }
    /// Coefficients listed from g^0 upwards.
    static ParamPoly from_coefficients(const std::vector<Rational>& ascending);

    [[nodiscard]] bool is_zero() const { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    [[nodiscard]] bool is_one() const;
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const { return terms_.empty() ? -1 : static_cast<int>(terms_.rbegin()->first); }
    [[nodiscard]] Rational coefficient(unsigned exponent) const;
    [[nodiscard]] Rational leading_coefficient() const;
    /// Constant term; equals the value when is_constant().
    [[nodiscard]] Rational constant_term() const { return coefficient(0); }
    [[nodiscard]] const Terms& terms() const { return terms_; }

    [[nodiscard]] Rational evaluate(const Rational& g0) const;

    ParamPoly& operator+=(const ParamPoly& rhs);
    ParamPoly& operator-=(const ParamPoly& rhs);
    ParamPoly& operator*=(const ParamPoly& rhs);
    ParamPoly& operator*=(const Rational& rhs);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);
    friend ParamPoly operator*(ParamPoly a, const Rational& b) { return a *= b; }
    ParamPoly operator-() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) = default;

    [[nodiscard]] ParamPoly pow(unsigned exponent) const;

    /// Euclidean division over Q: *this = q * divisor + r with deg r < deg divisor.
    [[nodiscard]] std::pair<ParamPoly, ParamPoly> divmod(const ParamPoly& divisor) const;
    /// Exact quotient; throws std::domain_error when the remainder is nonzero.
    [[nodiscard]] ParamPoly exact_div(const ParamPoly& divisor) const;
    /// Divides by the leading coefficient (zero stays zero).
    [[nodiscard]] ParamPoly monic() const;

    /// "g^2+4*g+4", "-1/2*g", "0".
    [[nodiscard]] std::string to_string() const;
    /// True when to_string() has more than one additive term.
    [[nodiscard]] bool needs_parentheses() const { return terms_.size() > 1; }

private:
    void prune();
    Terms terms_;
};

/// Monic gcd over Q; gcd(0, 0) = 0.
ParamPoly gcd(ParamPoly a, ParamPoly b);

/// All integers g0 >= 0 with p(g0) = 0. Screening is by the rational root
/// theorem on the content-free integer form; every candidate is evaluated.
/// Throws std::domain_error for the zero polynomial (every g0 is a root).
std::vector<long> nonnegative_integer_roots(const ParamPoly& p);

}  // namespace chowkit
