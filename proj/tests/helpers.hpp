#pragma once

// Test-side oracles, independent of the library implementations they check.

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

#include "iscount/connectivity.hpp"
#include "iscount/graph.hpp"
#include "iscount/partition.hpp"
#include "iscount/rational.hpp"
#include "iscount/skeleton.hpp"

namespace testutil {

using namespace iscount;

// Definition-level cut vertices: remove each vertex, compare component counts.
inline std::set<VertexId> cut_vertices_by_definition(const Graph& g) {
    std::set<VertexId> out;
    size_t base = components(g).size();
    for (VertexId v : g.vertices()) {
        Graph h = g;
        h.remove_vertex(v);
        if (components(h).size() > base) out.insert(v);
    }
    return out;
}

// All pairs {u,v} (u < v) whose removal leaves >= 2 components each holding a
// vertex of degree 3 in g, in lexicographic order.
inline std::vector<std::pair<VertexId, VertexId>> qualifying_pairs_by_enumeration(
    const Graph& g) {
    std::vector<std::pair<VertexId, VertexId>> out;
    auto verts = g.vertices();
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            Graph h = g;
            h.remove_vertex(verts[i]);
            h.remove_vertex(verts[j]);
            int with_deg3 = 0;
            for (const auto& comp : components(h)) {
                bool has = std::any_of(comp.begin(), comp.end(),
                                       [&](VertexId w) { return g.degree(w) == 3; });
                with_deg3 += has;
            }
            if (with_deg3 >= 2) out.emplace_back(verts[i], verts[j]);
        }
    return out;
}

// Minimum width over every balanced split of the skeleton vertices.
inline int min_bisection_width_by_enumeration(const Skeleton& b) {
    std::vector<VertexId> verts(b.verts.begin(), b.verts.end());
    int n = static_cast<int>(verts.size());
    int take = n / 2;
    std::vector<int> idx(take);
    for (int i = 0; i < take; ++i) idx[i] = i;
    int best = -1;
    for (;;) {
        Partition p;
        std::set<int> chosen(idx.begin(), idx.end());
        for (int i = 0; i < n; ++i)
            (chosen.count(i) ? p.v0 : p.v1).insert(verts[i]);
        int w = cut_width(p, b);
        if (best < 0 || w < best) best = w;
        int i = take - 1;
        while (i >= 0 && idx[i] == n - take + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
    return best;
}

// F_1 = F_2 = 1; #IS(P_n) = F_{n+2}.
inline BigInt fibonacci(int k) {
    BigInt a = 1, b = 1;
    for (int i = 2; i < k; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return k <= 0 ? BigInt(0) : b;
}

// L_1 = 1, L_2 = 3; #IS(C_n) = L_n.
inline BigInt lucas(int k) {
    BigInt a = 2, b = 1;  // L_0, L_1
    for (int i = 1; i < k; ++i) {
        BigInt c = a + b;
        a = b;
        b = c;
    }
    return k == 0 ? a : b;
}

}  // namespace testutil
