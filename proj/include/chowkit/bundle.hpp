#pragma once

#include "chowkit/chow_element.hpp"

namespace chowkit {

/// Rank plus total Chern class, truncated at the presentation's truncation degree.
/// `formal` marks classes such as truncated inverses that are not honest
/// bundles; their graded parts above `rank` are meaningful.
struct BundleClass {
    int rank = 0;
    ChowElement total;
    bool formal = false;

    [[nodiscard]] ChowElement chern(int i) const { return total.graded_part(i); }
    [[nodiscard]] const PresentationPtr& presentation() const { return total.presentation(); }
};

class BundleError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

BundleClass trivial_bundle(PresentationPtr presentation, int rank = 0);
/// Line bundle with first Chern class c1 (must be homogeneous of degree 1).
BundleClass line_bundle(const ChowElement& c1);
/// Honest bundle of the given rank from its Chern classes c_1..c_k (k <= rank).
BundleClass bundle_from_chern(int rank, const std::vector<ChowElement>& classes);

BundleClass whitney_sum(const BundleClass& a, const BundleClass& b);
BundleClass dual(const BundleClass& b);
/// E tensor L for a line bundle L with first Chern class c1:
/// c(E (x) L) = sum_i c_i(E) (1 + c1)^(r - i).
BundleClass twist_by_line(const BundleClass& b, const ChowElement& c1);

/// Formal inverse of the total Chern class, truncated at `cutoff`.
BundleClass inverse_total_chern(const BundleClass& b, int cutoff);

/// Bundle of order-m principal parts of a line bundle along a relative curve:
/// rank m + 1, total class prod_{i=0}^{m} (1 + line_c1 + i * omega_c1).
BundleClass principal_parts_chern(int order, const ChowElement& omega_c1, const ChowElement& line_c1);

/// c_rank. Throws BundleError for formal classes or rank above the truncation.
ChowElement top_chern(const BundleClass& b);

/// Degree (d1 - l) part of c(normal_ambient) * c(normal_component)^{-1}.
ChowElement excess_class(const BundleClass& normal_ambient, const BundleClass& normal_component, int d1, int l);

}  // namespace chowkit
