#include "iscount/cardinality.hpp"

#include <stdexcept>

namespace iscount {

CardinalityState trivial_cardinality(const Graph& g) {
    CardinalityState c;
    for (VertexId v : g.vertices()) {
        c.c1.emplace(v, Rational(1));
        c.c0v.emplace(v, Rational(1));
    }
    for (const Edge& e : g.edges()) c.c0e.emplace(e, Rational(1));
    return c;
}

Rational weight_of_set(const Graph& g, const CardinalityState& c, const std::set<VertexId>& s) {
    for (VertexId v : s) {
        if (!g.has_vertex(v)) throw std::invalid_argument("weight_of_set: vertex not in graph");
        for (VertexId u : g.neighbors(v))
            if (s.count(u)) throw std::invalid_argument("weight_of_set: set is not independent");
    }
    Rational w = c.scalar;
    for (VertexId v : g.vertices()) w *= s.count(v) ? c.c1.at(v) : c.c0v.at(v);
    for (const Edge& e : g.edges())
        if (!s.count(e.first) && !s.count(e.second)) w *= c.c0e.at(e);
    return w;
}

bool is_proper(const Graph& g, const CardinalityState& c) {
    for (VertexId v : g.vertices())
        if (c.c0v.at(v).sign() <= 0) return false;
    for (const Edge& e : g.edges())
        if (c.c0e.at(e).sign() <= 0) return false;
    for (VertexId v : g.vertices())
        if (!c.added.count(v) && c.c1.at(v).sign() <= 0) return false;
    for (VertexId v : g.vertices()) {
        Rational t = c.c0v.at(v);
        for (VertexId u : g.neighbors(v)) t *= c.edge_weight(v, u);
        if ((c.c1.at(v) + t).sign() <= 0) return false;
    }
    return true;
}

bool state_consistent(const Graph& g, const CardinalityState& c) {
    if (c.scalar.is_zero()) return false;
    if (static_cast<int>(c.c1.size()) != g.num_vertices()) return false;
    if (static_cast<int>(c.c0v.size()) != g.num_vertices()) return false;
    if (static_cast<int>(c.c0e.size()) != g.num_edges()) return false;
    for (const auto& [v, w] : c.c1)
        if (!g.has_vertex(v)) return false;
    for (const auto& [e, w] : c.c0e)
        if (!g.has_edge(e.first, e.second)) return false;
    for (VertexId v : c.added) {
        if (!g.has_vertex(v)) return false;
        if (g.degree(v) > 2) return false;
        for (VertexId u : g.neighbors(v))
            if (c.added.count(u)) return false;
    }
    return true;
}

CardinalityState restrict_to(const Graph& sub, const CardinalityState& c) {
    CardinalityState out;
    for (VertexId v : sub.vertices()) {
        out.c1.emplace(v, c.c1.at(v));
        out.c0v.emplace(v, c.c0v.at(v));
        if (c.added.count(v)) out.added.insert(v);
    }
    for (const Edge& e : sub.edges()) out.c0e.emplace(e, c.c0e.at(e));
    return out;
}

void erase_vertex_weights(CardinalityState& c, const Graph& g, VertexId v) {
    for (VertexId u : g.neighbors(v)) c.c0e.erase(make_edge(v, u));
    c.c1.erase(v);
    c.c0v.erase(v);
    c.added.erase(v);
}

}  // namespace iscount
