#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "iscount/rational.hpp"

namespace iscount {

/// Counters collected across one counting run, including the recursive
/// sub-counts spawned by the cut reductions.
struct SearchStats {
    long long branch_nodes = 0;  // driver invocations (search-tree nodes)
    long long branchings = 0;    // two-way branch events
    long long r1 = 0;            // isolated-vertex reductions
    long long r2 = 0;            // leaf reductions
    long long d0 = 0;            // component splits
    long long d1 = 0;            // cut-vertex splits
    long long d2 = 0;            // two-cut splits
    long long degenerate_cuts = 0;
    long long restarts = 0;
    long long bisections = 0;
    int max_depth = 0;

    std::vector<int> widths;  // width of each bisection, in order

    // (depth, measure) at each bisection-policy branch node, capped.
    std::vector<std::pair<int, Rational>> measure_trace;
    long long measure_violations = 0;  // child measure failed to drop

    // branch-policy usage
    long long sel_cutoff = 0;
    long long sel_two_cross = 0;
    long long sel_one_cross = 0;
    long long sel_all_three = 0;
    long long sel_deg4 = 0;
    long long sel_high_degree = 0;
};

inline constexpr std::size_t kMeasureTraceCap = 65536;

}  // namespace iscount
