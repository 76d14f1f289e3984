#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

namespace iscount {

/// Stable vertex identifier. Ids are issued in increasing order and never
/// reused within one computation, so vertices created late (e.g. by a cut
/// reduction) are distinguishable from every vertex that ever existed.
using VertexId = int;

using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Mutable simple undirected graph. Value type: copy freely, no sharing.
/// Adjacency is symmetric, no self-loops, no parallel edges. All iteration
/// orders are sorted by id so runs are reproducible.
class Graph {
public:
    Graph() = default;

    /// Inserts a vertex with a fresh id and returns it.
    VertexId add_vertex() {
        VertexId id = next_id_++;
        adj_[id];
        return id;
    }

    /// Inserts a vertex with an explicit id (parsers, generators).
    void add_vertex(VertexId id) {
        if (id <= 0) throw std::invalid_argument("vertex ids are positive");
        if (adj_.count(id)) throw std::invalid_argument("duplicate vertex id");
        adj_[id];
        if (id >= next_id_) next_id_ = id + 1;
    }

    void add_edge(VertexId u, VertexId v) {
        if (u == v) throw std::invalid_argument("self-loop");
        auto& nu = adj_.at(u);
        auto& nv = adj_.at(v);
        if (nu.insert(v).second) {
            nv.insert(u);
            ++m_;
        }
    }

    void remove_edge(VertexId u, VertexId v) {
        if (adj_.at(u).erase(v)) {
            adj_.at(v).erase(u);
            --m_;
        }
    }

    void remove_vertex(VertexId v) {
        auto it = adj_.find(v);
        if (it == adj_.end()) throw std::invalid_argument("no such vertex");
        for (VertexId u : it->second) {
            adj_.at(u).erase(v);
            --m_;
        }
        adj_.erase(it);
    }

    bool has_vertex(VertexId v) const { return adj_.count(v) != 0; }
    bool has_edge(VertexId u, VertexId v) const {
        auto it = adj_.find(u);
        return it != adj_.end() && it->second.count(v) != 0;
    }

    const std::set<VertexId>& neighbors(VertexId v) const { return adj_.at(v); }
    int degree(VertexId v) const { return static_cast<int>(adj_.at(v).size()); }

    int num_vertices() const { return static_cast<int>(adj_.size()); }
    int num_edges() const { return m_; }
    bool empty() const { return adj_.empty(); }

    int max_degree() const {
        int d = 0;
        for (const auto& [v, ns] : adj_) d = std::max(d, static_cast<int>(ns.size()));
        return d;
    }
    int min_degree() const {
        if (adj_.empty()) return 0;
        int d = num_vertices();
        for (const auto& [v, ns] : adj_) d = std::min(d, static_cast<int>(ns.size()));
        return d;
    }
    /// n_d: number of vertices of degree exactly d.
    int count_degree(int d) const {
        int c = 0;
        for (const auto& [v, ns] : adj_) c += (static_cast<int>(ns.size()) == d);
        return c;
    }
    /// n_{>=d}: number of vertices of degree at least d.
    int count_degree_at_least(int d) const {
        int c = 0;
        for (const auto& [v, ns] : adj_) c += (static_cast<int>(ns.size()) >= d);
        return c;
    }

    std::vector<VertexId> vertices() const {
        std::vector<VertexId> out;
        out.reserve(adj_.size());
        for (const auto& [v, ns] : adj_) out.push_back(v);
        return out;
    }

    /// Canonical (u < v) edge list in lexicographic order.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(m_);
        for (const auto& [v, ns] : adj_)
            for (VertexId u : ns)
                if (v < u) out.emplace_back(v, u);
        return out;
    }

    Graph induced(const std::set<VertexId>& keep) const {
        Graph g;
        for (VertexId v : keep) {
            if (!has_vertex(v)) throw std::invalid_argument("induced: vertex not in graph");
            g.adj_[v];
        }
        for (VertexId v : keep)
            for (VertexId u : adj_.at(v))
                if (u > v && keep.count(u)) {
                    g.adj_[v].insert(u);
                    g.adj_[u].insert(v);
                    ++g.m_;
                }
        g.next_id_ = next_id_;
        return g;
    }

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::map<VertexId, std::set<VertexId>> adj_;
    VertexId next_id_ = 1;
    int m_ = 0;
};

}  // namespace iscount
