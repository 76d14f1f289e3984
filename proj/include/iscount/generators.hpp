#pragma once

#include <random>

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"

namespace iscount {

/// Erdos-Renyi G(n, p): each pair independently with probability p.
Graph gnp(int n, double p, std::mt19937_64& rng);

/// Random 3-regular graph by the pairing model with simple-graph rejection.
/// n must be even and at least 4.
Graph random_cubic(int n, std::mt19937_64& rng);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen();
Graph bowtie();  // two triangles sharing one vertex (the shared vertex is 1)
Graph cube_q3();
/// Two hub vertices joined by three internally disjoint paths with a, b and
/// c inner vertices.
Graph theta_graph(int a, int b, int c);

/// A random proper state with values drawn from exact rationals in
/// [1/3, 5]. With `gadget_flavored`, an independent set of degree-<=2
/// vertices is marked as added and given negative c1 consistent with
/// properness.
CardinalityState random_proper_state(const Graph& g, std::mt19937_64& rng,
                                     bool gadget_flavored = false);

}  // namespace iscount
