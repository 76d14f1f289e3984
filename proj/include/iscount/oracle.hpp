#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/rational.hpp"

namespace iscount {

struct OracleCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Hard cap on exhaustive enumeration.
struct OracleLimit {
    int max_n = 25;
};

/// Number of independent sets (the empty set counts), by subset enumeration
/// over vertices sorted by id with pruning on the first adjacency violation.
BigInt count_is_bruteforce(const Graph& g, const OracleLimit& limit = {});

/// Exact weighted total: sum of weight_of_set over all independent sets.
Rational weighted_total_bruteforce(const Graph& g, const CardinalityState& c,
                                   const OracleLimit& limit = {});

/// Weighted total over independent sets respecting (vertex, in/out)
/// constraints; zero when no independent set satisfies them.
Rational restricted_total_bruteforce(const Graph& g, const CardinalityState& c,
                                     const std::vector<std::pair<VertexId, int>>& constraints,
                                     const OracleLimit& limit = {});

}  // namespace iscount
