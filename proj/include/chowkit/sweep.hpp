#pragma once

#include "chowkit/linalg.hpp"
#include "chowkit/splitting.hpp"
#include "chowkit/strata.hpp"

#include <vector>

// Data-parallel sweeps (OpenMP). Each kernel has a serial twin with the same
// signature and output; tests compare the two.
namespace chowkit::sweep {

/// Rank of m specialized at g0 = lo..hi (inclusive).
std::vector<std::size_t> rank_range(const PolyMatrix& m, long lo, long hi);
std::vector<std::size_t> rank_range_serial(const PolyMatrix& m, long lo, long hi);

struct JetEntry {
    SplittingType st;
    bool in_B = false;
    JetResult result;
};

/// Every splitting type with g0 in 0..g_max, in (g0, m) order.
std::vector<JetEntry> jet_ranks(int g_max, const JetSpec& spec, bool locus_B_only = true);
std::vector<JetEntry> jet_ranks_serial(int g_max, const JetSpec& spec, bool locus_B_only = true);

std::vector<StratumDescriptor> enumerate(int g);
std::vector<StratumDescriptor> enumerate_serial(int g);

struct OracleEntry {
    int g = 0;
    std::size_t count = 0;
    bool equal = false;
};

/// enumerate_codim1(g) against oracle_enumerate(g) for g = 0..g_max.
std::vector<OracleEntry> oracle_agreement(int g_max);
std::vector<OracleEntry> oracle_agreement_serial(int g_max);

}  // namespace chowkit::sweep
