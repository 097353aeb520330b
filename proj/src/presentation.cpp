#include "chowkit/presentation.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <set>

namespace chowkit {

// ---------------------------------------------------------------------------
// Raw term arithmetic

namespace terms {

void add_into(TermMap& acc, const Exponents& e, const ParamPoly& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = acc.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) acc.erase(it);
    }
}

TermMap add(const TermMap& a, const TermMap& b) {
    TermMap out = a;
    for (const auto& [e, c] : b) add_into(out, e, c);
    return out;
}

TermMap scale(const TermMap& a, const ParamPoly& c) {
    TermMap out;
    if (c.is_zero()) return out;
    for (const auto& [e, coeff] : a) add_into(out, e, coeff * c);
    return out;
}

TermMap multiply_free(const TermMap& a, const TermMap& b) {
    TermMap out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            Exponents e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
            add_into(out, e, ca * cb);
        }
    }
    return out;
}

TermMap constant(std::size_t n_generators, const ParamPoly& c) {
    TermMap out;
    add_into(out, Exponents(n_generators, 0), c);
    return out;
}

TermMap generator(std::size_t n_generators, std::size_t index) {
    Exponents e(n_generators, 0);
    e[index] = 1;
    TermMap out;
    out.emplace(std::move(e), ParamPoly(1));
    return out;
}

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<Generator>& gens) : text_(text), gens_(gens) {}

    TermMap run() {
        TermMap value = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw PresentationError("parse error at offset " + std::to_string(pos_) + " in '" + std::string(text_) +
                                "': " + what);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    TermMap expr() {
        skip_ws();
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        TermMap acc = term();
        if (negate) acc = scale(acc, ParamPoly(-1));
        while (true) {
            if (accept('+')) {
                acc = add(acc, term());
            } else if (accept('-')) {
                acc = add(acc, scale(term(), ParamPoly(-1)));
            } else {
                break;
            }
        }
        return acc;
    }

    TermMap term() {
        TermMap acc = factor();
        while (accept('*')) acc = multiply_free(acc, factor());
        return acc;
    }

    TermMap factor() {
        TermMap base = primary();
        if (accept('^')) {
            const unsigned k = unsigned_number();
            TermMap result = constant(gens_.size(), ParamPoly(1));
            for (unsigned i = 0; i < k; ++i) result = multiply_free(result, base);
            return result;
        }
        return base;
    }

    unsigned unsigned_number() {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected an exponent");
        return static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
    }

    TermMap primary() {
        skip_ws();
        if (pos_ >= text_.size()) fail("unexpected end of input");
        const char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            TermMap inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::size_t den_start = pos_;
                while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
                if (den_start == pos_) fail("expected a denominator");
            }
            Rational r = Rational::parse(text_.substr(start, pos_ - start));
            return constant(gens_.size(), ParamPoly(r));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const std::string_view name = text_.substr(start, pos_ - start);
            if (name == "g") return constant(gens_.size(), ParamPoly::g());
            for (std::size_t i = 0; i < gens_.size(); ++i)
                if (gens_[i].name == name) return generator(gens_.size(), i);
            pos_ = start;
            fail("unknown symbol '" + std::string(name) + "'");
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string_view text_;
    const std::vector<Generator>& gens_;
    std::size_t pos_ = 0;
};

}  // namespace

TermMap parse(std::string_view text, const std::vector<Generator>& generators) {
    return Parser(text, generators).run();
}

}  // namespace terms

// ---------------------------------------------------------------------------
// RingPresentation

std::optional<std::size_t> RingPresentation::find(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return i;
    return std::nullopt;
}

std::size_t RingPresentation::index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw PresentationError("unknown generator '" + std::string(name) + "'");
    return *i;
}

const TermMap& RingPresentation::rule(std::size_t gen) const {
    if (!rules_.at(gen)) throw PresentationError("generator '" + generators_[gen].name + "' has no square rule");
    return *rules_[gen];
}

bool RingPresentation::has_rules() const {
    return std::any_of(rules_.begin(), rules_.end(), [](const auto& r) { return r.has_value(); });
}

int RingPresentation::weighted_degree(const Exponents& e) const {
    int d = 0;
    for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * generators_[i].degree;
    return d;
}

std::vector<int> RingPresentation::measure(const Exponents& e) const {
    std::vector<int> m;
    m.reserve(measure_order_.size());
    for (std::size_t i : measure_order_) m.push_back(e[i]);
    return m;
}

bool RingPresentation::is_normal(const Exponents& e) const {
    return std::none_of(measure_order_.begin(), measure_order_.end(), [&](std::size_t i) { return e[i] >= 2; });
}

TermMap RingPresentation::reduce(TermMap raw, const RewriteStrategy& strategy) const {
    if (measure_order_.empty()) {
        std::erase_if(raw, [](const auto& kv) { return kv.second.is_zero(); });
        return raw;
    }
    const std::vector<std::size_t>& priority = strategy.priority.empty() ? priority_ : strategy.priority;
    TermMap pending = std::move(raw);
    TermMap out;
    std::vector<std::size_t> eligible;
    while (!pending.empty()) {
        auto where = pending.begin();
        if (strategy.rng != nullptr && pending.size() > 1) {
            std::uniform_int_distribution<std::size_t> pick(0, pending.size() - 1);
            std::advance(where, pick(*strategy.rng));
        }
        auto node = pending.extract(where);
        Exponents e = std::move(node.key());
        ParamPoly c = std::move(node.mapped());
        if (c.is_zero()) continue;

        eligible.clear();
        for (std::size_t gen : priority)
            if (e[gen] >= 2) eligible.push_back(gen);
        if (eligible.empty()) {
            terms::add_into(out, e, c);
            continue;
        }
        std::size_t gen = eligible.front();
        if (strategy.rng != nullptr) {
            std::uniform_int_distribution<std::size_t> pick(0, eligible.size() - 1);
            gen = eligible[pick(*strategy.rng)];
        }
#ifndef NDEBUG
        const std::vector<int> before = measure(e);
#endif
        e[gen] = static_cast<std::uint16_t>(e[gen] - 2);
        for (const auto& [re, rc] : *rules_[gen]) {
            Exponents next(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) next[i] = static_cast<std::uint16_t>(e[i] + re[i]);
            assert(measure(next) < before && "square rule failed to decrease the termination measure");
            terms::add_into(pending, next, c * rc);
        }
    }
    return out;
}

PresentationPtr RingPresentation::free_variant() const {
    std::vector<std::string> none;
    return make_presentation_from_terms(generators_, {}, truncation_, none);
}

bool RingPresentation::canonical_before(const Exponents& a, const Exponents& b) const {
    const int da = weighted_degree(a);
    const int db = weighted_degree(b);
    if (da != db) return da > db;
    // graded reverse lex: the last differing generator decides, smaller
    // exponent first.
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
}

bool operator==(const RingPresentation& a, const RingPresentation& b) {
    return a.generators_ == b.generators_ && a.rules_ == b.rules_ && a.truncation_ == b.truncation_;
}

// ---------------------------------------------------------------------------
// Construction

PresentationPtr make_presentation_from_terms(std::vector<Generator> generators,
                                             std::vector<std::pair<std::string, TermMap>> rules,
                                             std::optional<int> truncation,
                                             std::vector<std::string> rewrite_priority) {
    std::set<std::string> seen;
    for (const auto& gen : generators) {
        if (gen.name.empty()) throw PresentationError("generator with empty name");
        if (gen.name == "g") throw PresentationError("'g' is reserved for the genus parameter");
        if (!seen.insert(gen.name).second) throw PresentationError("duplicate generator '" + gen.name + "'");
        if (gen.degree < 1) throw PresentationError("generator '" + gen.name + "' must have degree >= 1");
    }
    if (truncation && *truncation < 1) throw PresentationError("truncation degree must be positive");

    auto pres = std::shared_ptr<RingPresentation>(new RingPresentation());
    pres->generators_ = std::move(generators);
    pres->rules_.assign(pres->generators_.size(), std::nullopt);
    pres->truncation_ = truncation.value_or(RingPresentation::kDefaultTruncation);
    const std::size_t n = pres->generators_.size();

    for (auto& [name, rhs] : rules) {
        const auto gen = pres->find(name);
        if (!gen) throw PresentationError("square rule for unknown generator '" + name + "'");
        if (pres->rules_[*gen]) throw PresentationError("duplicate square rule for '" + name + "'");
        for (const auto& [e, c] : rhs) {
            if (e.size() != n) throw PresentationError("rule for '" + name + "' has a malformed exponent vector");
            if (pres->weighted_degree(e) != 2 * pres->generators_[*gen].degree)
                throw PresentationError("rule for '" + name + "' is not homogeneous of degree " +
                                        std::to_string(2 * pres->generators_[*gen].degree));
            if (e[*gen] > 1)
                throw PresentationError("rule for '" + name + "' keeps '" + name + "' at exponent >= 2");
        }
        std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
        pres->rules_[*gen] = std::move(rhs);
    }

    for (std::size_t i = 0; i < n; ++i)
        if (pres->rules_[i]) pres->measure_order_.push_back(i);

    // x^2 -> rhs must strictly decrease the measure term by term.
    for (std::size_t gen : pres->measure_order_) {
        Exponents square(n, 0);
        square[gen] = 2;
        const auto lhs = pres->measure(square);
        for (const auto& [e, c] : *pres->rules_[gen]) {
            if (!(pres->measure(e) < lhs))
                throw PresentationError("rule for '" + pres->generators_[gen].name +
                                        "' does not decrease the termination measure");
        }
    }

    for (const auto& name : rewrite_priority) {
        const std::size_t gen = pres->index(name);
        if (!pres->rules_[gen]) throw PresentationError("rewrite priority names '" + name + "' which has no rule");
        if (std::find(pres->priority_.begin(), pres->priority_.end(), gen) != pres->priority_.end())
            throw PresentationError("rewrite priority lists '" + name + "' twice");
        pres->priority_.push_back(gen);
    }
    for (std::size_t gen : pres->measure_order_)
        if (std::find(pres->priority_.begin(), pres->priority_.end(), gen) == pres->priority_.end())
            pres->priority_.push_back(gen);

    pres->print_order_.resize(n);
    std::iota(pres->print_order_.begin(), pres->print_order_.end(), std::size_t{0});
    std::sort(pres->print_order_.begin(), pres->print_order_.end(),
              [&](std::size_t a, std::size_t b) { return pres->generators_[a].name < pres->generators_[b].name; });
    return pres;
}

PresentationPtr make_presentation(std::vector<Generator> generators, std::vector<SquareRuleSpec> rules,
                                  std::optional<int> truncation, std::vector<std::string> rewrite_priority) {
    std::vector<std::pair<std::string, TermMap>> parsed;
    parsed.reserve(rules.size());
    for (auto& rule : rules) parsed.emplace_back(rule.generator, terms::parse(rule.rhs, generators));
    return make_presentation_from_terms(std::move(generators), std::move(parsed), truncation,
                                        std::move(rewrite_priority));
}

int default_truncation_degree() {
    const char* env = std::getenv("CHOWKIT_TRUNCATION");
    if (env == nullptr || *env == '\0') return RingPresentation::kDefaultTruncation;
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > 64)
        throw std::invalid_argument(std::string("CHOWKIT_TRUNCATION must be a positive integer, got '") + env + "'");
    return static_cast<int>(value);
}

}  // namespace chowkit
