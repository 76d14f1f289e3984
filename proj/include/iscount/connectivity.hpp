#pragma once

#include <optional>
#include <set>
#include <vector>

#include "iscount/graph.hpp"

namespace iscount {

/// Connected components as vertex sets, ordered by smallest contained id.
std::vector<std::set<VertexId>> components(const Graph& g);

bool is_connected(const Graph& g);

/// Vertices whose removal increases the number of components.
std::set<VertexId> cut_vertices(const Graph& g);

struct SeparatingPair {
    VertexId u, v;
    std::vector<std::set<VertexId>> parts;  // components of G - {u,v}
};

/// Lexicographically smallest pair {u,v} (u < v) whose removal leaves at
/// least two components each containing a vertex of degree 3 in G, together
/// with the component list of G - {u,v}. Expects a connected graph with no
/// cut vertex.
std::optional<SeparatingPair> find_separating_pair(const Graph& g);

}  // namespace iscount
