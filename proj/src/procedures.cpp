#include "iscount/procedures.hpp"

#include <cassert>
#include <vector>

namespace iscount {

namespace {

VertexId first_of_degree(const Graph& g, int d) {
    for (VertexId v : g.vertices())
        if (g.degree(v) == d) return v;
    return 0;
}

void delete_vertex(ReducedState& st, VertexId v) {
    erase_vertex_weights(st.card, st.graph, v);
    st.graph.remove_vertex(v);
}

void delete_set(ReducedState& st, const std::set<VertexId>& vs) {
    for (VertexId v : vs) delete_vertex(st, v);
}

// The four restricted totals of an induced split part, by the documented
// double-prop recipe. `sub` must carry scalar 1.
Rational pair_restricted_value(const ReducedState& sub, VertexId u, int zeta, VertexId v, int eta,
                               const SubCounter& count) {
    ReducedState s = sub;
    prop(s, u, zeta);
    prop(s, v, eta);
    reduction(s);
    return count(s.graph, s.card);
}

// g1 minus the cut set must have no edge leaving g1.
void check_split_part(const Graph& g, const std::set<VertexId>& g1,
                      const std::set<VertexId>& cut, const char* who) {
    for (VertexId w : g1) {
        if (cut.count(w)) continue;
        for (VertexId t : g.neighbors(w))
            if (!g1.count(t))
                throw std::invalid_argument(std::string(who) + ": split part is not closed");
    }
}

}  // namespace

void reduction(ReducedState& st, SearchStats* stats) {
    assert(state_consistent(st.graph, st.card));
    while (st.graph.min_degree() < 2 && st.graph.num_vertices() > 2) {
        if (VertexId v = first_of_degree(st.graph, 0)) {
            st.card.scalar *= st.card.c0v.at(v) + st.card.c1.at(v);
            delete_vertex(st, v);
            if (stats) ++stats->r1;
        } else {
            v = first_of_degree(st.graph, 1);
            VertexId u = *st.graph.neighbors(v).begin();
            st.card.c0v.at(u) *=
                st.card.c1.at(v) + st.card.c0v.at(v) * st.card.edge_weight(u, v);
            st.card.c1.at(u) *= st.card.c0v.at(v);
            delete_vertex(st, v);
            if (stats) ++stats->r2;
        }
    }
}

void prop(ReducedState& st, VertexId v, int eta) {
    if (!st.graph.has_vertex(v)) throw std::invalid_argument("prop: vertex not in graph");
    if (eta == 0) {
        Rational acc = st.card.c0v.at(v);
        for (VertexId u : st.graph.neighbors(v)) st.card.c0v.at(u) *= st.card.edge_weight(u, v);
        delete_vertex(st, v);
        st.card.scalar *= acc;
        return;
    }
    Rational acc = st.card.c1.at(v);
    const std::set<VertexId> open = st.graph.neighbors(v);
    std::set<VertexId> closed = open;
    closed.insert(v);
    for (VertexId u : open) acc *= st.card.c0v.at(u);
    for (auto a = open.begin(); a != open.end(); ++a)
        for (auto b = std::next(a); b != open.end(); ++b)
            if (st.graph.has_edge(*a, *b)) acc *= st.card.edge_weight(*a, *b);
    for (VertexId u : open)
        for (VertexId w : st.graph.neighbors(u))
            if (!closed.count(w)) st.card.c0v.at(w) *= st.card.edge_weight(u, w);
    delete_set(st, closed);
    st.card.scalar *= acc;
}

Rational restricted_value(const ReducedState& sub, VertexId v, int eta, const SubCounter& count) {
    ReducedState s = sub;
    prop(s, v, eta);
    reduction(s);
    return count(s.graph, s.card);
}

void d0(ReducedState& st, const std::set<VertexId>& component, const SubCounter& count,
        SearchStats* stats) {
    if (component.size() == st.card.c1.size())
        throw std::invalid_argument("d0: component is the whole graph");
    Graph part = st.graph.induced(component);
    for (VertexId v : component)
        if (static_cast<int>(part.neighbors(v).size()) != st.graph.degree(v))
            throw std::invalid_argument("d0: set is not a full component");
    st.card.scalar *= count(part, restrict_to(part, st.card));
    delete_set(st, component);
    if (stats) ++stats->d0;
}

void d1(ReducedState& st, VertexId v, const std::set<VertexId>& g1, const SubCounter& count,
        SearchStats* stats) {
    if (!g1.count(v)) throw std::invalid_argument("d1: v not in g1");
    check_split_part(st.graph, g1, {v}, "d1");
    Graph part = st.graph.induced(g1);
    ReducedState sub{part, restrict_to(part, st.card)};
    st.card.c1.at(v) = restricted_value(sub, v, 1, count);
    st.card.c0v.at(v) = restricted_value(sub, v, 0, count);
    std::set<VertexId> gone = g1;
    gone.erase(v);
    delete_set(st, gone);
    if (stats) ++stats->d1;
}

void d2(ReducedState& st, VertexId u, VertexId v, const std::set<VertexId>& g1,
        const SubCounter& count, SearchStats* stats) {
    if (!g1.count(u) || !g1.count(v)) throw std::invalid_argument("d2: cut pair not in g1");
    check_split_part(st.graph, g1, {u, v}, "d2");
    const Rational& c1u = st.card.c1.at(u);
    const Rational& c0u = st.card.c0v.at(u);
    const Rational& c1v = st.card.c1.at(v);
    const Rational& c0v = st.card.c0v.at(v);
    if (c1u.is_zero() || c0u.is_zero() || c1v.is_zero() || c0v.is_zero())
        throw DegenerateCutError("d2: zero endpoint weight");

    Graph part = st.graph.induced(g1);
    ReducedState sub{part, restrict_to(part, st.card)};
    bool adjacent = st.graph.has_edge(u, v);

    // Normalized restricted totals of the split part.
    Rational n00 = pair_restricted_value(sub, u, 0, v, 0, count) / (c0u * c0v);
    Rational n01 = pair_restricted_value(sub, u, 0, v, 1, count) / (c0u * c1v);
    Rational n10 = pair_restricted_value(sub, u, 1, v, 0, count) / (c1u * c0v);

    std::set<VertexId> gone = g1;
    gone.erase(u);
    gone.erase(v);

    if (adjacent) {
        st.card.c1.at(u) *= n10;
        st.card.c1.at(v) *= n01;
        st.card.edge_weight(u, v) = n00;
        delete_set(st, gone);
        if (stats) ++stats->d2;
        return;
    }

    Rational n11 = pair_restricted_value(sub, u, 1, v, 1, count) / (c1u * c1v);
    if (n11.is_zero()) throw DegenerateCutError("d2: zero joint total");

    Rational det = n00 * n11 - n01 * n10;
    if (det.is_zero()) {
        st.card.c1.at(u) *= n11;
        st.card.c0v.at(u) *= n01;
        st.card.c0v.at(v) *= n10 / n11;
        delete_set(st, gone);
        if (stats) ++stats->d2;
        return;
    }

    if (st.card.added.count(u) || st.card.added.count(v))
        throw DegenerateCutError("d2: gadget would neighbor an added vertex");

    delete_set(st, gone);
    VertexId x = st.graph.add_vertex();
    st.graph.add_edge(u, x);
    st.graph.add_edge(v, x);
    st.card.c0v.emplace(x, n11);
    st.card.c1.emplace(x, det / n11);
    st.card.c0e.emplace(make_edge(u, x), n01 / n11);
    st.card.c0e.emplace(make_edge(v, x), n10 / n11);
    st.card.added.insert(x);
    if (stats) ++stats->d2;
}

}  // namespace iscount
