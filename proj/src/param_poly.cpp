#include "chowkit/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace chowkit {

ParamPoly::ParamPoly(const Rational& constant) {
    if (!constant.is_zero()) terms_.emplace(0u, constant);
}

ParamPoly ParamPoly::monomial(const Rational& c, unsigned exponent) {
    ParamPoly p;
    if (!c.is_zero()) p.terms_.emplace(exponent, c);
    return p;
}

ParamPoly ParamPoly::from_coefficients(const std::vector<Rational>& ascending) {
    ParamPoly p;
    for (unsigned i = 0; i < ascending.size(); ++i)
        if (!ascending[i].is_zero()) p.terms_.emplace(i, ascending[i]);
    return p;
}

bool ParamPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == Rational(1);
}

Rational ParamPoly::coefficient(unsigned exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational ParamPoly::leading_coefficient() const {
    return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Rational ParamPoly::evaluate(const Rational& g0) const {
    // Horner from the top exponent down.
    Rational acc(0);
    int prev = degree();
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const int e = static_cast<int>(it->first);
        for (int k = e; k < prev; ++k) acc *= g0;
        acc += it->second;
        prev = e;
    }
    for (int k = 0; k < prev; ++k) acc *= g0;
    return acc;
}

void ParamPoly::prune() {
    std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) terms_[e] += c;
    prune();
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) terms_[e] -= c;
    prune();
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.terms_[ea + eb] += ca * cb;
    out.prune();
    return out;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& rhs) {
    *this = *this * rhs;
    return *this;
}

ParamPoly& ParamPoly::operator*=(const Rational& rhs) {
    if (rhs.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& kv : terms_) kv.second *= rhs;
    return *this;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly out = *this;
    for (auto& kv : out.terms_) kv.second = -kv.second;
    return out;
}

ParamPoly ParamPoly::pow(unsigned exponent) const {
    ParamPoly result(1);
    ParamPoly base = *this;
    while (exponent > 0) {
        if (exponent & 1u) result *= base;
        exponent >>= 1u;
        if (exponent > 0) base *= base;
    }
    return result;
}

std::pair<ParamPoly, ParamPoly> ParamPoly::divmod(const ParamPoly& divisor) const {
    if (divisor.is_zero()) throw std::domain_error("ParamPoly::divmod: division by zero polynomial");
    ParamPoly quotient;
    ParamPoly remainder = *this;
    const int dd = divisor.degree();
    const Rational lead = divisor.leading_coefficient();
    while (!remainder.is_zero() && remainder.degree() >= dd) {
        const unsigned shift = static_cast<unsigned>(remainder.degree() - dd);
        const ParamPoly step = monomial(remainder.leading_coefficient() / lead, shift);
        quotient += step;
        remainder -= step * divisor;
    }
    return {quotient, remainder};
}

ParamPoly ParamPoly::exact_div(const ParamPoly& divisor) const {
    auto [q, r] = divmod(divisor);
    if (!r.is_zero())
        throw std::domain_error("ParamPoly::exact_div: " + to_string() + " is not divisible by " + divisor.to_string());
    return q;
}

ParamPoly ParamPoly::monic() const {
    if (is_zero()) return *this;
    ParamPoly out = *this;
    out *= Rational(1) / leading_coefficient();
    return out;
}

std::string ParamPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational mag = c.abs();
        if (c.sign() < 0)
            os << "-";
        else if (!first)
            os << "+";
        first = false;
        if (e == 0) {
            os << mag;
            continue;
        }
        if (mag != Rational(1)) os << mag << "*";
        os << "g";
        if (e > 1) os << "^" << e;
    }
    return os.str();
}

ParamPoly gcd(ParamPoly a, ParamPoly b) {
    while (!b.is_zero()) {
        ParamPoly r = a.divmod(b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class n) {
    if (n < 0) n = -n;
    std::vector<mpz_class> small, large;
    for (mpz_class d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) large.push_back(n / d);
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace

std::vector<long> nonnegative_integer_roots(const ParamPoly& p) {
    if (p.is_zero()) throw std::domain_error("nonnegative_integer_roots: zero polynomial vanishes everywhere");
    std::vector<long> roots;
    const unsigned low = p.terms().begin()->first;
    if (low > 0) roots.push_back(0);
    // Any nonzero integer root divides the lowest nonzero coefficient of the
    // integer-scaled polynomial.
    mpz_class lcm_den = 1;
    for (const auto& [e, c] : p.terms()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
    const Rational trailing = p.terms().begin()->second * Rational(lcm_den, mpz_class(1));
    for (const mpz_class& d : positive_divisors(trailing.numerator())) {
        if (!d.fits_slong_p()) break;
        const long candidate = d.get_si();
        if (p.evaluate(Rational(candidate)).is_zero()) roots.push_back(candidate);
    }
    return roots;
}

}  // namespace chowkit
