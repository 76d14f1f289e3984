#pragma once

#include <set>
#include <vector>

#include "iscount/engine.hpp"
#include "iscount/graph.hpp"
#include "iscount/rational.hpp"

namespace iscount {

struct ChromaticConfig {
    int max_n = 18;  // inclusion-exclusion walks all 2^n vertex subsets
    EngineConfig engine;
};

struct ChromaticResult {
    int chi = 0;
    std::vector<BigInt> per_k_sums;   // the alternating sum for k = 1..chi
    long long subsets_evaluated = 0;  // streamed, never stored
};

/// Number of independent sets of G[W] (1 when W is empty), counted by the
/// engine under trivial weights.
BigInt count_is_induced(const Graph& g, const std::set<VertexId>& w,
                        const EngineConfig& cfg = {});

/// s_k = sum over W of (-1)^{n-|W|} * (#independent sets of G[W])^k.
/// G is k-colorable exactly when s_k > 0.
BigInt chromatic_ie_sum(const Graph& g, int k, const EngineConfig& cfg = {},
                        long long* subsets_evaluated = nullptr);

/// Least k with s_k > 0, scanning k upward. Exact integers throughout;
/// subsets are enumerated by an in-place counter so space stays polynomial.
ChromaticResult chromatic_number(const Graph& g, const ChromaticConfig& cfg = {});

/// Exhaustive coloring search, the test oracle. Capped at 12 vertices.
int chromatic_bruteforce(const Graph& g);

}  // namespace iscount
