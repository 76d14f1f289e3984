#pragma once

#include <functional>
#include <set>
#include <stdexcept>

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/stats.hpp"

namespace iscount {

/// A graph together with its weights. The procedures below rewrite it in
/// place so that the weighted total is unchanged (or, for prop, becomes the
/// requested restricted total).
struct ReducedState {
    Graph graph;
    CardinalityState card;
};

/// Computes the weighted total of a sub-state. The cut procedures use this
/// for their recursive counts; the engine passes itself, tests may pass the
/// brute-force oracle.
using SubCounter = std::function<Rational(const Graph&, const CardinalityState&)>;

/// Raised by d2 when a required divisor vanishes or the gadget vertex would
/// become adjacent to an earlier added vertex. The caller abandons the cut
/// and branches instead.
struct DegenerateCutError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Removes vertices of degree 0 and 1 while min degree < 2 and n > 2,
/// folding their weights into a neighbor (leaf) or the scalar (isolated).
void reduction(ReducedState& st, SearchStats* stats = nullptr);

/// Restricts the state to independent sets avoiding v (eta = 0) or
/// containing v (eta = 1): deletes v resp. N[v], folds edge weights into the
/// surviving endpoints, and moves the forced factors into the scalar.
void prop(ReducedState& st, VertexId v, int eta);

/// c(G1, v^eta) by the prop + reduction + count recipe, on a copy.
Rational restricted_value(const ReducedState& sub, VertexId v, int eta, const SubCounter& count);

/// Splits off a whole component: multiplies the scalar by its total and
/// deletes it. `component` must be a full component, not all of V.
void d0(ReducedState& st, const std::set<VertexId>& component, const SubCounter& count,
        SearchStats* stats = nullptr);

/// Cut-vertex split: g1 = V(H) + {v} for a component H of G - v. Replaces
/// c1(v), c0(v) by the restricted totals of G[g1] and deletes g1 - {v}.
void d1(ReducedState& st, VertexId v, const std::set<VertexId>& g1, const SubCounter& count,
        SearchStats* stats = nullptr);

/// Two-cut split: g1 = V(H) + {u,v} for a component H of G - {u,v}. Deletes
/// g1 - {u,v} and folds the four restricted totals into the weights of u and
/// v, the edge uv, or a fresh degree-2 gadget vertex, depending on the case.
/// Throws DegenerateCutError instead of dividing by zero.
void d2(ReducedState& st, VertexId u, VertexId v, const std::set<VertexId>& g1,
        const SubCounter& count, SearchStats* stats = nullptr);

}  // namespace iscount
