#include "chowkit/linalg.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace chowkit {

// ---------------------------------------------------------------------------
// RatFunc

RatFunc::RatFunc(ParamPoly num) : num_(std::move(num)) {}

RatFunc::RatFunc(ParamPoly num, ParamPoly den) {
    if (den.is_zero()) throw std::domain_error("RatFunc with zero denominator");
    if (num.is_zero()) return;
    const ParamPoly d = gcd(num, den);
    num = num.exact_div(d);
    den = den.exact_div(d);
    const Rational lead = den.leading_coefficient();
    num_ = num * (Rational(1) / lead);
    den_ = den * (Rational(1) / lead);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc division by zero");
    return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RatFunc::to_string() const {
    std::string n = num_.to_string();
    if (den_.is_one()) return n;
    if (num_.needs_parentheses()) n = "(" + n + ")";
    const std::string d = den_.needs_parentheses() || !den_.is_constant() ? "(" + den_.to_string() + ")"
                                                                           : den_.to_string();
    return n + "/" + d;
}

// ---------------------------------------------------------------------------
// Bases and matrices

std::vector<Exponents> monomial_basis(const RingPresentation& pres, int d) {
    std::vector<Exponents> out;
    if (d < 0) return out;
    const std::size_t n = pres.size();
    Exponents cur(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int left) {
        if (i == n) {
            if (left == 0) out.push_back(cur);
            return;
        }
        const int deg = pres.generators()[i].degree;
        int max_e = left / deg;
        if (pres.has_rule(i)) max_e = std::min(max_e, 1);
        for (int e = 0; e <= max_e; ++e) {
            cur[i] = static_cast<std::uint16_t>(e);
            rec(i + 1, left - e * deg);
        }
        cur[i] = 0;
    };
    rec(0, d);
    std::sort(out.begin(), out.end(),
              [&](const Exponents& a, const Exponents& b) { return pres.canonical_before(a, b); });
    return out;
}

PolyMatrix coefficient_matrix(const std::vector<ChowElement>& relations, int d, const std::vector<Exponents>& basis) {
    PolyMatrix m;
    m.reserve(relations.size());
    for (std::size_t r = 0; r < relations.size(); ++r) {
        const auto& rel = relations[r];
        if (r > 0 && !same_presentation(rel.presentation(), relations[0].presentation()))
            throw std::invalid_argument("relations live in different presentations");
        if (!rel.is_homogeneous(d))
            throw std::invalid_argument("relation " + std::to_string(r) + " (" + rel.to_string() +
                                        ") is not homogeneous of degree " + std::to_string(d));
        std::vector<ParamPoly> row;
        row.reserve(basis.size());
        for (const auto& e : basis) row.push_back(rel.coefficient(e));
        m.push_back(std::move(row));
    }
    return m;
}

RatMatrix evaluate_matrix(const PolyMatrix& m, long g0) {
    RatMatrix out;
    out.reserve(m.size());
    const Rational at(g0);
    for (const auto& row : m) {
        std::vector<Rational> r;
        r.reserve(row.size());
        for (const auto& p : row) r.push_back(p.evaluate(at));
        out.push_back(std::move(r));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Elimination

std::size_t rank(RatMatrix m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[r][c];
            for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
        }
        ++r;
    }
    return r;
}

Rational determinant(RatMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    Rational det(1);
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c].is_zero()) ++p;
        if (p == n) return Rational(0);
        if (p != c) {
            std::swap(m[p], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m[i][c].is_zero()) continue;
            const Rational f = m[i][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) m[i][k] -= f * m[c][k];
        }
    }
    return det;
}

namespace {

// Fraction-free echelon form; returns the rank. On exit the leading
// `rank` rows are echelonized and m[rank-1][last pivot] carries the
// Bareiss determinant for square full-rank input.
std::size_t bareiss(PolyMatrix& m, int* sign) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    ParamPoly prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c].is_zero()) ++p;
        if (p == rows) continue;
        if (p != r) {
            std::swap(m[p], m[r]);
            if (sign) *sign = -*sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t k = c + 1; k < cols; ++k)
                m[i][k] = (m[r][c] * m[i][k] - m[i][c] * m[r][k]).exact_div(prev);
            m[i][c] = ParamPoly();
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

}  // namespace

ParamPoly determinant(PolyMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
    if (n == 0) return ParamPoly(1);
    int sign = 1;
    if (bareiss(m, &sign) < n) return ParamPoly();
    return sign < 0 ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

std::size_t generic_rank(PolyMatrix m) { return bareiss(m, nullptr); }

RankReport rank_report(const PolyMatrix& m) {
    RankReport rep;
    rep.rows = m.size();
    rep.cols = m.empty() ? 0 : m[0].size();

    // Fraction-free elimination with explicit row tracking, so the pivot
    // rows and columns of the echelon form name a nonzero maximal minor.
    PolyMatrix a = m;
    std::vector<std::size_t> row_of(rep.rows);
    for (std::size_t i = 0; i < rep.rows; ++i) row_of[i] = i;
    std::vector<std::size_t> pivot_rows;
    std::vector<std::size_t> pivot_cols;
    ParamPoly prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < rep.cols && r < rep.rows; ++c) {
        std::size_t p = r;
        while (p < rep.rows && a[p][c].is_zero()) ++p;
        if (p == rep.rows) continue;
        std::swap(a[p], a[r]);
        std::swap(row_of[p], row_of[r]);
        for (std::size_t i = r + 1; i < rep.rows; ++i) {
            for (std::size_t k = c + 1; k < rep.cols; ++k)
                a[i][k] = (a[r][c] * a[i][k] - a[i][c] * a[r][k]).exact_div(prev);
            a[i][c] = ParamPoly();
        }
        prev = a[r][c];
        pivot_rows.push_back(row_of[r]);
        pivot_cols.push_back(c);
        ++r;
    }
    rep.generic_rank = r;
    if (r == 0) {
        rep.certificate_minor = ParamPoly(1);
        return rep;
    }
    PolyMatrix minor(r, std::vector<ParamPoly>(r));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) minor[i][j] = m[pivot_rows[i]][pivot_cols[j]];
    rep.certificate_minor = determinant(std::move(minor));
    if (rep.certificate_minor.is_zero()) throw std::logic_error("rank certificate minor vanished");
    rep.candidate_points = nonnegative_integer_roots(rep.certificate_minor);
    for (long g0 : rep.candidate_points)
        if (rank(evaluate_matrix(m, g0)) < r) rep.drop_points.push_back(g0);
    return rep;
}

SliceRank degree_slice_rank(const std::vector<ChowElement>& relations, int d) {
    if (relations.empty()) throw std::invalid_argument("degree_slice_rank needs at least one relation");
    SliceRank out;
    out.basis = monomial_basis(*relations[0].presentation(), d);
    out.matrix = coefficient_matrix(relations, d, out.basis);
    out.report = rank_report(out.matrix);
    return out;
}

std::size_t degree_slice_rank_at(const std::vector<ChowElement>& relations, int d, long g0) {
    if (relations.empty()) return 0;
    const auto basis = monomial_basis(*relations[0].presentation(), d);
    return rank(evaluate_matrix(coefficient_matrix(relations, d, basis), g0));
}

Rref rref(const PolyMatrix& m) {
    Rref out;
    std::vector<std::vector<RatFunc>> a;
    for (const auto& row : m) a.emplace_back(row.begin(), row.end());
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        // Prefer a constant pivot, then one with no nonnegative integer roots.
        std::size_t p = rows;
        int best = -1;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i][c].is_zero()) continue;
            const ParamPoly& num = a[i][c].num();
            const int score = num.is_constant() ? 2 : (nonnegative_integer_roots(num).empty() ? 1 : 0);
            if (score > best) {
                best = score;
                p = i;
            }
        }
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        const RatFunc pivot = a[r][c];
        out.divisors.push_back(pivot.num());
        for (auto& x : a[r]) x = x / pivot;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            const RatFunc f = a[i][c];
            for (std::size_t k = 0; k < cols; ++k) a[i][k] = a[i][k] - f * a[r][k];
        }
        out.pivot_columns.push_back(c);
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

std::string matrix_to_string(const PolyMatrix& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        os << '[';
        for (std::size_t j = 0; j < row.size(); ++j) os << (j ? ", " : "") << row[j].to_string();
        os << "]\n";
    }
    return os.str();
}

}  // namespace chowkit
