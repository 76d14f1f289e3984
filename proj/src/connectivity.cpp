#include "iscount/connectivity.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace iscount {

std::vector<std::set<VertexId>> components(const Graph& g) {
    std::vector<std::set<VertexId>> out;
    std::set<VertexId> seen;
    for (VertexId start : g.vertices()) {
        if (seen.count(start)) continue;
        std::set<VertexId> comp;
        std::vector<VertexId> stack{start};
        seen.insert(start);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (VertexId u : g.neighbors(v))
                if (seen.insert(u).second) stack.push_back(u);
        }
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

std::set<VertexId> cut_vertices(const Graph& g) {
    std::set<VertexId> cuts;
    std::map<VertexId, int> disc, low;
    int timer = 0;

    std::function<void(VertexId, VertexId)> dfs = [&](VertexId v, VertexId parent) {
        disc[v] = low[v] = ++timer;
        int children = 0;
        for (VertexId u : g.neighbors(v)) {
            if (!disc.count(u)) {
                ++children;
                dfs(u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent != 0 && low[u] >= disc[v]) cuts.insert(v);
            } else if (u != parent) {
                low[v] = std::min(low[v], disc[u]);
            }
        }
        if (parent == 0 && children > 1) cuts.insert(v);
    };

    for (VertexId v : g.vertices())
        if (!disc.count(v)) dfs(v, 0);
    return cuts;
}

std::optional<SeparatingPair> find_separating_pair(const Graph& g) {
    // One vertex deleted at a time; cut vertices of the remainder are exactly
    // the partners completing a separating pair.
    for (VertexId u : g.vertices()) {
        Graph rest = g;
        rest.remove_vertex(u);
        for (VertexId v : cut_vertices(rest)) {
            if (v <= u) continue;  // pair {v,u} already handled at u' = v
            Graph both = rest;
            both.remove_vertex(v);
            auto parts = components(both);
            int with_deg3 = 0;
            for (const auto& part : parts) {
                bool has = std::any_of(part.begin(), part.end(),
                                       [&](VertexId w) { return g.degree(w) == 3; });
                with_deg3 += has;
            }
            if (with_deg3 >= 2) return SeparatingPair{u, v, std::move(parts)};
        }
    }
    return std::nullopt;
}

}  // namespace iscount
