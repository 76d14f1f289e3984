#include "iscount/skeleton.hpp"

#include <stdexcept>

namespace iscount {

namespace {

// Follows the degree-2 chain entered along edge v-first; returns the first
// vertex that is not an inner degree-2 vertex (possibly v itself).
VertexId chain_end(const Graph& g, VertexId v, VertexId first) {
    VertexId prev = v, cur = first;
    while (cur != v && g.degree(cur) == 2) {
        const auto& ns = g.neighbors(cur);
        VertexId nxt = (*ns.begin() == prev) ? *std::next(ns.begin()) : *ns.begin();
        prev = cur;
        cur = nxt;
    }
    return cur;
}

}  // namespace

Skeleton skeleton(const Graph& g) {
    if (g.max_degree() > 3) throw std::invalid_argument("skeleton: max degree exceeds 3");
    Skeleton b;
    for (VertexId v : g.vertices())
        if (g.degree(v) == 3) b.verts.insert(v);
    for (VertexId v : b.verts) {
        int self_slots = 0;
        for (VertexId first : g.neighbors(v)) {
            VertexId w = chain_end(g, v, first);
            if (w == v)
                ++self_slots;
            else if (g.degree(w) == 3 && w > v)
                ++b.edge_mult[make_edge(v, w)];
        }
        if (self_slots > 0) b.self_chains[v] = self_slots / 2;
    }
    return b;
}

std::multiset<VertexId> topological_neighbors(const Graph& g, VertexId v) {
    std::multiset<VertexId> out;
    int self_slots = 0;
    for (VertexId first : g.neighbors(v)) {
        VertexId w = chain_end(g, v, first);
        if (w == v)
            ++self_slots;
        else
            out.insert(w);
    }
    for (int i = 0; i < self_slots / 2; ++i) out.insert(v);
    return out;
}

}  // namespace iscount
