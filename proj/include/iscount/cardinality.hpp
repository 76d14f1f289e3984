#pragma once

#include <map>
#include <set>

#include "iscount/graph.hpp"
#include "iscount/rational.hpp"

namespace iscount {

/// Weights attached to a graph: c1(v) for "v in the set", c0(v) for "v out",
/// c0(e) for "edge untouched", plus a scalar accumulator that multiplies the
/// whole total. `added` is the set of vertices created by the two-cut
/// reduction; only those may carry non-positive c1.
///
/// The total being computed is
///   scalar * sum over independent S of
///       prod_{v in S} c1(v) * prod_{v not in S} c0(v) * prod_{e, e cap S = 0} c0(e).
struct CardinalityState {
    std::map<VertexId, Rational> c1;
    std::map<VertexId, Rational> c0v;
    std::map<Edge, Rational> c0e;
    Rational scalar{1};
    std::set<VertexId> added;

    const Rational& edge_weight(VertexId u, VertexId v) const { return c0e.at(make_edge(u, v)); }
    Rational& edge_weight(VertexId u, VertexId v) { return c0e.at(make_edge(u, v)); }
};

/// All-ones weights: the total equals the plain number of independent sets.
CardinalityState trivial_cardinality(const Graph& g);

/// scalar * prod c1(S) * prod c0(V-S) * prod c0(e disjoint from S).
/// Throws std::invalid_argument when S is not independent.
Rational weight_of_set(const Graph& g, const CardinalityState& c, const std::set<VertexId>& s);

/// The positivity conditions that keep every division in the procedures exact:
///  (1) c0 > 0 on every vertex and edge,
///  (2) c1 > 0 outside `added`,
///  (3) c1(x) + c0(x) * prod_{y in N(x)} c0(xy) > 0 for every vertex x.
bool is_proper(const Graph& g, const CardinalityState& c);

/// Structural consistency: weight domains match the graph exactly, scalar is
/// nonzero, and `added` vertices have degree <= 2 and are pairwise
/// non-adjacent.
bool state_consistent(const Graph& g, const CardinalityState& c);

/// Sub-state for an induced subgraph: weights restricted, scalar reset to 1.
CardinalityState restrict_to(const Graph& sub, const CardinalityState& c);

/// Drops v and its incident edge weights from the maps (no folding).
void erase_vertex_weights(CardinalityState& c, const Graph& g, VertexId v);

}  // namespace iscount
