#pragma once

#include <map>
#include <set>

#include "iscount/graph.hpp"

namespace iscount {

/// B(G): the degree-3 vertices of a subcubic graph, joined whenever a path
/// with all inner vertices of degree 2 connects them. Parallel chains are
/// kept as edge multiplicities; a chain returning to its origin is recorded
/// as a self-chain.
struct Skeleton {
    std::set<VertexId> verts;
    std::map<Edge, int> edge_mult;
    std::map<VertexId, int> self_chains;

    bool self_adjacent(VertexId v) const {
        auto it = self_chains.find(v);
        return it != self_chains.end() && it->second > 0;
    }
    int multiplicity(VertexId u, VertexId v) const {
        auto it = edge_mult.find(make_edge(u, v));
        return it == edge_mult.end() ? 0 : it->second;
    }
    /// Distinct skeleton neighbors of v with chain multiplicities.
    std::map<VertexId, int> neighbors(VertexId v) const {
        std::map<VertexId, int> out;
        for (const auto& [e, m] : edge_mult) {
            if (e.first == v) out[e.second] = m;
            if (e.second == v) out[e.first] = m;
        }
        return out;
    }
};

/// Builds B(G). Requires max degree <= 3.
Skeleton skeleton(const Graph& g);

/// Ends of the degree-2 chains leaving v, one entry per distinct chain;
/// v itself appears once per chain returning to it.
std::multiset<VertexId> topological_neighbors(const Graph& g, VertexId v);

}  // namespace iscount
