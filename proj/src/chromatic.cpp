#include "iscount/chromatic.hpp"

#include <stdexcept>

#include "iscount/oracle.hpp"

namespace iscount {

BigInt count_is_induced(const Graph& g, const std::set<VertexId>& w, const EngineConfig& cfg) {
    Graph sub = g.induced(w);
    Engine engine(cfg);
    Rational total = engine.count(sub);
    return total.numerator();  // totals under trivial weights are integers
}

BigInt chromatic_ie_sum(const Graph& g, int k, const EngineConfig& cfg,
                        long long* subsets_evaluated) {
    auto verts = g.vertices();
    const int n = static_cast<int>(verts.size());
    BigInt sum = 0;
    for (std::uint64_t mask = 0;; ++mask) {
        std::set<VertexId> w;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) w.insert(verts[i]);
        BigInt isets = count_is_induced(g, w, cfg);
        BigInt term;
        mpz_pow_ui(term.get_mpz_t(), isets.get_mpz_t(), static_cast<unsigned long>(k));
        if ((n - static_cast<int>(w.size())) % 2)
            sum -= term;
        else
            sum += term;
        if (subsets_evaluated) ++*subsets_evaluated;
        if (mask + 1 == (std::uint64_t{1} << n)) break;
    }
    return sum;
}

ChromaticResult chromatic_number(const Graph& g, const ChromaticConfig& cfg) {
    if (g.num_vertices() > cfg.max_n)
        throw OracleCapError("chromatic_number: graph has " +
                             std::to_string(g.num_vertices()) + " vertices, cap is " +
                             std::to_string(cfg.max_n));
    ChromaticResult res;
    if (g.empty()) return res;
    for (int k = 1; k <= g.num_vertices(); ++k) {
        BigInt sk = chromatic_ie_sum(g, k, cfg.engine, &res.subsets_evaluated);
        res.per_k_sums.push_back(sk);
        if (sk > 0) {
            res.chi = k;
            return res;
        }
    }
    throw std::logic_error("chromatic_number: no positive sum up to k = n");
}

namespace {

bool colorable(const Graph& g, const std::vector<VertexId>& order, std::vector<int>& color,
               size_t i, int k) {
    if (i == order.size()) return true;
    VertexId v = order[i];
    int used = 0;
    for (size_t j = 0; j < i; ++j) used = std::max(used, color[j] + 1);
    for (int c = 0; c < std::min(k, used + 1); ++c) {
        bool ok = true;
        for (size_t j = 0; j < i && ok; ++j)
            if (color[j] == c && g.has_edge(order[j], v)) ok = false;
        if (!ok) continue;
        color[i] = c;
        if (colorable(g, order, color, i + 1, k)) return true;
    }
    return false;
}

}  // namespace

int chromatic_bruteforce(const Graph& g) {
    if (g.num_vertices() > 12)
        throw OracleCapError("chromatic_bruteforce: cap is 12 vertices");
    if (g.empty()) return 0;
    auto order = g.vertices();
    for (int k = 1; k <= g.num_vertices(); ++k) {
        std::vector<int> color(order.size(), -1);
        if (colorable(g, order, color, 0, k)) return k;
    }
    return g.num_vertices();
}

}  // namespace iscount
