#include "iscount/generators.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace iscount {

Graph gnp(int n, double p, std::mt19937_64& rng) {
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    std::bernoulli_distribution coin(p);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_cubic(int n, std::mt19937_64& rng) {
    if (n < 4 || n % 2 != 0)
        throw std::invalid_argument("random_cubic: n must be even and at least 4");
    for (int attempt = 0; attempt < 10000; ++attempt) {
        std::vector<int> stubs(3 * n);
        for (int i = 0; i < 3 * n; ++i) stubs[i] = i / 3 + 1;
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g;
        for (int v = 1; v <= n; ++v) g.add_vertex(v);
        bool ok = true;
        for (int i = 0; i < 3 * n && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v))
                ok = false;
            else
                g.add_edge(u, v);
        }
        if (ok) return g;
    }
    throw std::runtime_error("random_cubic: pairing model failed to produce a simple graph");
}

Graph path_graph(int n) {
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be at least 3");
    Graph g = path_graph(n);
    g.add_edge(n, 1);
    return g;
}

Graph complete_graph(int n) {
    Graph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

Graph petersen() {
    Graph g;
    for (int v = 1; v <= 10; ++v) g.add_vertex(v);
    // outer 5-cycle 1..5, inner pentagram 6..10, spokes i -- i+5
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i + 1, (i + 1) % 5 + 1);
        g.add_edge(i + 6, (i + 2) % 5 + 6);
        g.add_edge(i + 1, i + 6);
    }
    return g;
}

Graph bowtie() {
    Graph g;
    for (int v = 1; v <= 5; ++v) g.add_vertex(v);
    g.add_edge(1, 2);
    g.add_edge(1, 3);
    g.add_edge(2, 3);
    g.add_edge(1, 4);
    g.add_edge(1, 5);
    g.add_edge(4, 5);
    return g;
}

Graph cube_q3() {
    Graph g;
    for (int v = 1; v <= 8; ++v) g.add_vertex(v);
    // vertices are 3-bit words (id - 1); edges flip one bit
    for (int a = 0; a < 8; ++a)
        for (int bit = 0; bit < 3; ++bit) {
            int b = a ^ (1 << bit);
            if (a < b) g.add_edge(a + 1, b + 1);
        }
    return g;
}

Graph theta_graph(int a, int b, int c) {
    Graph g;
    VertexId s = 1, t = 2;
    g.add_vertex(s);
    g.add_vertex(t);
    int next = 3;
    for (int len : {a, b, c}) {
        VertexId prev = s;
        for (int i = 0; i < len; ++i) {
            g.add_vertex(next);
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, t);
    }
    return g;
}

CardinalityState random_proper_state(const Graph& g, std::mt19937_64& rng,
                                     bool gadget_flavored) {
    static const Rational palette[] = {
        Rational(1, 3), Rational(1, 2), Rational(2, 3), Rational(1),  Rational(4, 3),
        Rational(3, 2), Rational(2),    Rational(5, 2), Rational(3),  Rational(7, 2),
        Rational(4),    Rational(5),
    };
    std::uniform_int_distribution<size_t> pick(0, std::size(palette) - 1);

    CardinalityState c;
    for (VertexId v : g.vertices()) {
        c.c1.emplace(v, palette[pick(rng)]);
        c.c0v.emplace(v, palette[pick(rng)]);
    }
    for (const Edge& e : g.edges()) c.c0e.emplace(e, palette[pick(rng)]);

    if (gadget_flavored) {
        static const Rational shrink[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
        std::uniform_int_distribution<int> q(0, 2);
        std::bernoulli_distribution take(0.5);
        for (VertexId v : g.vertices()) {
            if (g.degree(v) > 2 || !take(rng)) continue;
            bool blocked = false;
            for (VertexId u : g.neighbors(v))
                if (c.added.count(u)) blocked = true;
            if (blocked) continue;
            Rational prod = c.c0v.at(v);
            for (VertexId u : g.neighbors(v)) prod *= c.edge_weight(v, u);
            // c1 + c0 * prod(edges) = (1 - q) * prod > 0 keeps condition 3
            c.c1.at(v) = -(shrink[q(rng)] * prod);
            c.added.insert(v);
        }
    }
    return c;
}

}  // namespace iscount
