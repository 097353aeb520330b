#include "chowkit/splitting.hpp"

#include "chowkit/linalg.hpp"

#include <algorithm>
#include <cctype>

namespace chowkit {

SplittingType::SplittingType(int m_, int n_) : m(m_), n(n_) {
    if (m > n) throw std::invalid_argument("splitting type needs m <= n");
    if (m + n < 2) throw std::invalid_argument("splitting type needs m + n >= 2");
}

std::vector<SplittingType> splitting_types(int g0) {
    if (g0 < 0) throw std::invalid_argument("negative genus");
    std::vector<SplittingType> out;
    const int sum = g0 + 2;
    // m can be negative in principle; keep the range where Sym^3 has any sections.
    for (int m = -sum; 2 * m <= sum; ++m) out.emplace_back(m, sum - m);
    return out;
}

std::array<int, 4> splitting_sym3(const SplittingType& st) {
    return {2 * st.m - st.n, st.m, st.n, 2 * st.n - st.m};
}

std::pair<int, int> p1_cohomology(int d) { return {std::max(0, d + 1), std::max(0, -d - 1)}; }

bool in_locus_B(const SplittingType& st) { return 2 * st.m - st.n >= 0; }

JetSpec parse_row_spec(std::string_view text) {
    JetSpec spec;
    spec.order_p = 0;
    spec.order_q = 0;
    bool saw_p = false;
    bool saw_q = false;
    std::size_t i = 0;
    while (i < text.size()) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("malformed row spec '" + std::string(text) + "'");
        const int k = text[i] - '0';
        ++i;
        if (i == text.size()) throw std::invalid_argument("malformed row spec '" + std::string(text) + "'");
        const char which = text[i++];
        if (which == 'p' && !saw_p) {
            spec.order_p = k;
            saw_p = true;
        } else if (which == 'q' && !saw_q && saw_p) {
            spec.order_q = k;
            saw_q = true;
        } else {
            throw std::invalid_argument("malformed row spec '" + std::string(text) + "'");
        }
    }
    if (!saw_p || spec.order_p < 1 || spec.order_p > 3 || spec.order_q < 0 || spec.order_q > 3)
        throw std::invalid_argument("row spec '" + std::string(text) + "' needs 1-3 rows at p and 0-3 at q");
    return spec;
}

namespace {

long binom(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

void append_rows(RationalMatrix& m, const std::array<int, 4>& degrees, const PointSpec& pt, int order) {
    for (int k = 0; k < order; ++k) {
        std::vector<Rational> row;
        for (int j = 0; j < 4; ++j) {
            // summand j multiplies Y1^(3-j) Y0^j
            const int power = pt.on_directrix ? j : 3 - j;
            const Rational base = pt.on_directrix ? Rational(0) : pt.y;
            const Rational fiber = power < k ? Rational(0) : Rational(binom(power, k)) * base.pow(power - k);
            for (int e = 0; e <= degrees[j]; ++e) row.push_back(fiber * pt.x.pow(static_cast<unsigned>(e)));
        }
        m.push_back(std::move(row));
    }
}

}  // namespace

RationalMatrix jet_matrix(const SplittingType& st, const JetSpec& spec) {
    if (spec.order_p < 1 || spec.order_p > 3 || spec.order_q < 0 || spec.order_q > 3)
        throw std::invalid_argument("jet orders out of range");
    if (spec.order_q > 0 && spec.p.x == spec.q.x && !spec.same_fiber)
        throw std::invalid_argument("q lies on the fiber of p; request same-fiber mode explicitly");
    const auto degrees = splitting_sym3(st);
    RationalMatrix m;
    append_rows(m, degrees, spec.p, spec.order_p);
    append_rows(m, degrees, spec.q, spec.order_q);
    return m;
}

JetResult jet_rank(const SplittingType& st, const JetSpec& spec) {
    JetResult best;
    std::vector<Rational> ys{spec.q.y};
    if (spec.y_fallback && !spec.q.on_directrix && spec.order_q > 0)
        for (long y : {2L, 3L, 5L})
            if (Rational(y) != spec.q.y) ys.emplace_back(y);
    bool first = true;
    for (const auto& y : ys) {
        JetSpec s = spec;
        s.q.y = y;
        const RationalMatrix m = jet_matrix(st, s);
        JetResult r;
        r.rows = m.size();
        r.cols = m.empty() ? 0 : m[0].size();
        r.rank = rank(m);
        r.y_used = y;
        if (first || r.rank > best.rank) best = r;
        first = false;
        if (best.rank == best.rows) break;
    }
    return best;
}

}  // namespace chowkit
