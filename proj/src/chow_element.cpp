#include "chowkit/chow_element.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace chowkit {

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b) {
    return a == b || (a && b && *a == *b);
}

ChowElement::ChowElement(PresentationPtr presentation) : pres_(std::move(presentation)) {
    if (!pres_) throw std::invalid_argument("ChowElement needs a presentation");
}

ChowElement ChowElement::constant(PresentationPtr presentation, const ParamPoly& c) {
    ChowElement e(std::move(presentation));
    e.terms_ = terms::constant(e.pres_->size(), c);
    return e;
}

ChowElement ChowElement::generator(PresentationPtr presentation, std::string_view name) {
    ChowElement e(std::move(presentation));
    e.terms_ = terms::generator(e.pres_->size(), e.pres_->index(name));
    return e;
}

ChowElement ChowElement::from_terms(PresentationPtr presentation, TermMap raw, const RewriteStrategy& strategy) {
    ChowElement e(std::move(presentation));
    for (const auto& [exps, c] : raw)
        if (exps.size() != e.pres_->size()) throw PresentationError("exponent vector of the wrong length");
    e.terms_ = e.pres_->reduce(std::move(raw), strategy);
    return e;
}

ChowElement ChowElement::parse(PresentationPtr presentation, std::string_view text) {
    TermMap raw = terms::parse(text, presentation->generators());
    return from_terms(std::move(presentation), std::move(raw));
}

ParamPoly ChowElement::coefficient(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamPoly() : it->second;
}

int ChowElement::max_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, pres_->weighted_degree(e));
    return d;
}

bool ChowElement::is_homogeneous(int d) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const auto& kv) { return pres_->weighted_degree(kv.first) == d; });
}

bool ChowElement::is_homogeneous() const {
    return terms_.empty() || is_homogeneous(pres_->weighted_degree(terms_.begin()->first));
}

ChowElement ChowElement::graded_part(int d) const {
    ChowElement out(pres_);
    for (const auto& [e, c] : terms_)
        if (pres_->weighted_degree(e) == d) out.terms_.emplace(e, c);
    return out;
}

ChowElement ChowElement::truncated(int d) const {
    ChowElement out(pres_);
    for (const auto& [e, c] : terms_)
        if (pres_->weighted_degree(e) <= d) out.terms_.emplace(e, c);
    return out;
}

ChowElement ChowElement::evaluate_parameter(long g0) const {
    ChowElement out(pres_);
    const Rational at(g0);
    for (const auto& [e, c] : terms_) terms::add_into(out.terms_, e, ParamPoly(c.evaluate(at)));
    return out;
}

void ChowElement::require_same(const ChowElement& rhs, const char* op) const {
    if (!same_presentation(pres_, rhs.pres_))
        throw MixedPresentationError(std::string("operands of ") + op + " live in different presentations");
}

ChowElement& ChowElement::operator+=(const ChowElement& rhs) {
    require_same(rhs, "+");
    for (const auto& [e, c] : rhs.terms_) terms::add_into(terms_, e, c);
    return *this;
}

ChowElement& ChowElement::operator-=(const ChowElement& rhs) {
    require_same(rhs, "-");
    for (const auto& [e, c] : rhs.terms_) terms::add_into(terms_, e, -c);
    return *this;
}

ChowElement& ChowElement::operator*=(const ChowElement& rhs) {
    *this = multiply(rhs, {});
    return *this;
}

ChowElement& ChowElement::operator*=(const ParamPoly& rhs) {
    terms_ = terms::scale(terms_, rhs);
    return *this;
}

ChowElement ChowElement::operator-() const {
    ChowElement out(pres_);
    out.terms_ = terms::scale(terms_, ParamPoly(-1));
    return out;
}

ChowElement ChowElement::multiply(const ChowElement& rhs, const RewriteStrategy& strategy) const {
    require_same(rhs, "*");
    ChowElement out(pres_);
    out.terms_ = pres_->reduce(terms::multiply_free(terms_, rhs.terms_), strategy);
    return out;
}

ChowElement ChowElement::pow(unsigned exponent) const {
    ChowElement result = constant(pres_, ParamPoly(1));
    ChowElement base = *this;
    while (exponent != 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent != 0) base *= base;
    }
    return result;
}

bool operator==(const ChowElement& a, const ChowElement& b) {
    return same_presentation(a.pres_, b.pres_) && a.terms_ == b.terms_;
}

namespace {

std::string monomial_text(const RingPresentation& pres, const Exponents& e) {
    std::string out;
    for (std::size_t i : pres.print_order()) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += pres.generators()[i].name;
        if (e[i] > 1) out += '^' + std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string ChowElement::to_string() const {
    if (terms_.empty()) return "0";
    std::vector<const TermMap::value_type*> order;
    order.reserve(terms_.size());
    for (const auto& kv : terms_) order.push_back(&kv);
    std::sort(order.begin(), order.end(),
              [&](const auto* a, const auto* b) { return pres_->canonical_before(a->first, b->first); });

    std::ostringstream os;
    bool first = true;
    for (const auto* kv : order) {
        ParamPoly c = kv->second;
        const bool negative = c.leading_coefficient().sign() < 0;
        if (negative) c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        const std::string mono = monomial_text(*pres_, kv->first);
        if (mono.empty()) {
            const bool wrap = c.needs_parentheses() && (negative || terms_.size() > 1);
            os << (wrap ? "(" : "") << c.to_string() << (wrap ? ")" : "");
        } else if (c.is_one()) {
            os << mono;
        } else if (c.needs_parentheses()) {
            os << '(' << c.to_string() << ")*" << mono;
        } else {
            os << c.to_string() << '*' << mono;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const ChowElement& e) { return os << e.to_string(); }

std::pair<ChowElement, ChowElement> coefficient_extract(const ChowElement& e, std::string_view gen) {
    const auto& pres = e.presentation();
    const std::size_t i = pres->index(gen);
    if (!pres->has_rule(i))
        throw PresentationError("cannot extract '" + std::string(gen) + "': it has no square rule");
    TermMap coeff;
    TermMap rest;
    for (const auto& [exps, c] : e.terms()) {
        if (exps[i] == 0) {
            rest.emplace(exps, c);
        } else {
            Exponents lowered = exps;
            lowered[i] = 0;
            coeff.emplace(std::move(lowered), c);
        }
    }
    return {ChowElement::from_terms(pres, std::move(coeff)), ChowElement::from_terms(pres, std::move(rest))};
}

ChowElement embed(const ChowElement& e, const PresentationPtr& target) {
    const auto& src = e.presentation();
    std::vector<std::optional<std::size_t>> map(src->size());
    for (std::size_t i = 0; i < src->size(); ++i) {
        map[i] = target->find(src->generators()[i].name);
        if (map[i] && target->generators()[*map[i]].degree != src->generators()[i].degree)
            throw PresentationError("generator '" + src->generators()[i].name + "' changes degree under embedding");
    }
    TermMap raw;
    for (const auto& [exps, c] : e.terms()) {
        Exponents out(target->size(), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) {
            if (exps[i] == 0) continue;
            if (!map[i])
                throw PresentationError("generator '" + src->generators()[i].name +
                                        "' does not exist in the target presentation");
            out[*map[i]] = exps[i];
        }
        terms::add_into(raw, out, c);
    }
    return ChowElement::from_terms(target, std::move(raw));
}

ChowElement substitute(const ChowElement& e, std::string_view gen, const ChowElement& replacement) {
    const auto& pres = e.presentation();
    if (!same_presentation(pres, replacement.presentation()))
        throw MixedPresentationError("substitution target lives in a different presentation");
    const std::size_t i = pres->index(gen);
    TermMap raw;
    std::vector<TermMap> powers{terms::constant(pres->size(), ParamPoly(1))};
    for (const auto& [exps, c] : e.terms()) {
        while (powers.size() <= exps[i]) powers.push_back(terms::multiply_free(powers.back(), replacement.terms()));
        Exponents rest = exps;
        rest[i] = 0;
        TermMap mono;
        mono.emplace(std::move(rest), c);
        for (const auto& [pe, pc] : terms::multiply_free(mono, powers[exps[i]])) terms::add_into(raw, pe, pc);
    }
    return ChowElement::from_terms(pres, std::move(raw));
}

ChowElement free_mode(const ChowElement& e) { return embed(e, e.presentation()->free_variant()); }

}  // namespace chowkit
