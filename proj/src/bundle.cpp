#include "chowkit/bundle.hpp"

namespace chowkit {

namespace {

ChowElement one(const PresentationPtr& p) { return ChowElement::constant(p, ParamPoly(1)); }

int cutoff_of(const PresentationPtr& p) { return p->truncation_degree(); }

void require_same(const BundleClass& a, const BundleClass& b) {
    if (!same_presentation(a.presentation(), b.presentation()))
        throw MixedPresentationError("bundles live in different presentations");
}

}  // namespace

BundleClass trivial_bundle(PresentationPtr presentation, int rank) {
    if (rank < 0) throw BundleError("negative rank");
    return {rank, one(presentation), false};
}

BundleClass line_bundle(const ChowElement& c1) {
    if (!c1.is_homogeneous(1)) throw BundleError("first Chern class must have degree 1: " + c1.to_string());
    return {1, one(c1.presentation()) + c1, false};
}

BundleClass bundle_from_chern(int rank, const std::vector<ChowElement>& classes) {
    if (classes.empty()) throw BundleError("bundle_from_chern needs at least c_1");
    if (static_cast<int>(classes.size()) > rank) throw BundleError("more Chern classes than the rank allows");
    ChowElement total = one(classes[0].presentation());
    for (std::size_t i = 0; i < classes.size(); ++i) {
        if (!classes[i].is_homogeneous(static_cast<int>(i + 1)))
            throw BundleError("c_" + std::to_string(i + 1) + " has the wrong degree");
        total += classes[i];
    }
    return {rank, total.truncated(cutoff_of(total.presentation())), false};
}

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b) {
    require_same(a, b);
    const int cut = cutoff_of(a.presentation());
    return {a.rank + b.rank, (a.total * b.total).truncated(cut), a.formal || b.formal};
}

BundleClass dual(const BundleClass& b) {
    ChowElement out(b.presentation());
    for (int d = 0; d <= b.total.max_degree(); ++d) {
        const ChowElement part = b.total.graded_part(d);
        out += (d % 2 == 0) ? part : -part;
    }
    return {b.rank, out, b.formal};
}

BundleClass twist_by_line(const BundleClass& b, const ChowElement& c1) {
    if (b.formal) throw BundleError("cannot twist a formal class");
    if (!same_presentation(b.presentation(), c1.presentation()))
        throw MixedPresentationError("twist class lives in a different presentation");
    if (!c1.is_homogeneous(1)) throw BundleError("twisting class must have degree 1");
    const int cut = cutoff_of(b.presentation());
    const ChowElement l = one(b.presentation()) + c1;
    ChowElement total(b.presentation());
    for (int i = 0; i <= b.rank; ++i)
        total += (b.chern(i) * l.pow(static_cast<unsigned>(b.rank - i))).truncated(cut);
    return {b.rank, total.truncated(cut), false};
}

BundleClass inverse_total_chern(const BundleClass& b, int cutoff) {
    const auto& p = b.presentation();
    if (b.chern(0) != one(p)) throw BundleError("inverse needs a total class with constant term 1");
    // c = 1 + x, c^{-1} = sum_k (-x)^k truncated.
    const ChowElement x = b.total.truncated(cutoff) - one(p);
    ChowElement inv = one(p);
    ChowElement term = one(p);
    for (int k = 1; k <= cutoff; ++k) {
        term = (term * -x).truncated(cutoff);
        if (term.is_zero()) break;
        inv += term;
    }
    return {b.rank, inv, true};
}

BundleClass principal_parts_chern(int order, const ChowElement& omega_c1, const ChowElement& line_c1) {
    if (order < 0) throw BundleError("principal parts order must be nonnegative");
    if (!same_presentation(omega_c1.presentation(), line_c1.presentation()))
        throw MixedPresentationError("principal parts inputs live in different presentations");
    BundleClass acc = line_bundle(line_c1);
    for (int i = 1; i <= order; ++i)
        acc = whitney_sum(acc, line_bundle(line_c1 + omega_c1 * ParamPoly(i)));
    return acc;
}

ChowElement top_chern(const BundleClass& b) {
    if (b.formal) throw BundleError("top Chern class of a formal class");
    if (b.rank > cutoff_of(b.presentation()))
        throw BundleError("rank " + std::to_string(b.rank) + " exceeds the truncation degree " +
                          std::to_string(cutoff_of(b.presentation())));
    return b.chern(b.rank);
}

ChowElement excess_class(const BundleClass& normal_ambient, const BundleClass& normal_component, int d1, int l) {
    if (l > d1) throw BundleError("component codimension exceeds the ambient codimension");
    if (l < 0) throw BundleError("negative component codimension");
    require_same(normal_ambient, normal_component);
    const int cut = d1 - l;
    const ChowElement quotient =
        normal_ambient.total.truncated(cut) * inverse_total_chern(normal_component, cut).total;
    return quotient.graded_part(cut);
}

}  // namespace chowkit
