#include "chowkit/sweep.hpp"

namespace chowkit::sweep {

std::vector<std::size_t> rank_range(const PolyMatrix& m, long lo, long hi) {
    if (hi < lo) return {};
    std::vector<std::size_t> out(static_cast<std::size_t>(hi - lo + 1));
#pragma omp parallel for schedule(dynamic)
    for (long g0 = lo; g0 <= hi; ++g0) out[static_cast<std::size_t>(g0 - lo)] = rank(evaluate_matrix(m, g0));
    return out;
}

std::vector<std::size_t> rank_range_serial(const PolyMatrix& m, long lo, long hi) {
    std::vector<std::size_t> out;
    for (long g0 = lo; g0 <= hi; ++g0) out.push_back(rank(evaluate_matrix(m, g0)));
    return out;
}

namespace {

std::vector<JetEntry> jet_slots(int g_max, bool locus_B_only) {
    std::vector<JetEntry> slots;
    for (int g0 = 0; g0 <= g_max; ++g0)
        for (const auto& st : splitting_types(g0))
            if (!locus_B_only || in_locus_B(st)) slots.push_back({st, in_locus_B(st), {}});
    return slots;
}

}  // namespace

std::vector<JetEntry> jet_ranks(int g_max, const JetSpec& spec, bool locus_B_only) {
    auto slots = jet_slots(g_max, locus_B_only);
    const long n = static_cast<long>(slots.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < n; ++i) slots[i].result = jet_rank(slots[i].st, spec);
    return slots;
}

std::vector<JetEntry> jet_ranks_serial(int g_max, const JetSpec& spec, bool locus_B_only) {
    auto slots = jet_slots(g_max, locus_B_only);
    for (auto& s : slots) s.result = jet_rank(s.st, spec);
    return slots;
}

std::vector<StratumDescriptor> enumerate(int g) {
    const int top = branch_count(g) / 2;
    std::vector<std::vector<StratumDescriptor>> per_j(static_cast<std::size_t>(top + 1));
#pragma omp parallel for schedule(dynamic)
    for (int j = 2; j <= top; ++j) per_j[static_cast<std::size_t>(j)] = strata_for_j(g, j);
    std::vector<StratumDescriptor> out;
    for (auto& part : per_j) out.insert(out.end(), part.begin(), part.end());
    return out;
}

std::vector<StratumDescriptor> enumerate_serial(int g) { return enumerate_codim1(g); }

std::vector<OracleEntry> oracle_agreement(int g_max) {
    std::vector<OracleEntry> out(static_cast<std::size_t>(g_max + 1));
#pragma omp parallel for schedule(dynamic)
    for (int g = 0; g <= g_max; ++g) {
        const auto fast = enumerate_codim1(g);
        out[static_cast<std::size_t>(g)] = {g, fast.size(), fast == oracle_enumerate(g)};
    }
    return out;
}

std::vector<OracleEntry> oracle_agreement_serial(int g_max) {
    std::vector<OracleEntry> out;
    for (int g = 0; g <= g_max; ++g) {
        const auto fast = enumerate_codim1(g);
        out.push_back({g, fast.size(), fast == oracle_enumerate(g)});
    }
    return out;
}

}  // namespace chowkit::sweep
