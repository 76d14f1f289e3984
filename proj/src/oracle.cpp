#include "iscount/oracle.hpp"

#include <algorithm>

namespace iscount {

namespace {

void check_cap(const Graph& g, const OracleLimit& limit, const char* who) {
    int cap = std::min(limit.max_n, 30);
    if (g.num_vertices() > cap)
        throw OracleCapError(std::string(who) + ": graph has " +
                             std::to_string(g.num_vertices()) + " vertices, cap is " +
                             std::to_string(cap));
}

// Include/exclude recursion over vertices sorted by id. `chosen` holds the
// current partial independent set; a vertex is only added when it has no
// chosen neighbor, so dead subtrees are pruned at the first violation.
template <typename Visit>
void enumerate(const Graph& g, const std::vector<VertexId>& order, size_t i,
               std::set<VertexId>& chosen, Visit&& visit) {
    if (i == order.size()) {
        visit(chosen);
        return;
    }
    VertexId v = order[i];
    enumerate(g, order, i + 1, chosen, visit);
    for (VertexId u : g.neighbors(v))
        if (chosen.count(u)) return;
    chosen.insert(v);
    enumerate(g, order, i + 1, chosen, visit);
    chosen.erase(v);
}

}  // namespace

BigInt count_is_bruteforce(const Graph& g, const OracleLimit& limit) {
    check_cap(g, limit, "count_is_bruteforce");
    BigInt count = 0;
    auto order = g.vertices();
    std::set<VertexId> chosen;
    enumerate(g, order, 0, chosen, [&](const std::set<VertexId>&) { ++count; });
    return count;
}

Rational weighted_total_bruteforce(const Graph& g, const CardinalityState& c,
                                   const OracleLimit& limit) {
    check_cap(g, limit, "weighted_total_bruteforce");
    Rational total;
    auto order = g.vertices();
    std::set<VertexId> chosen;
    enumerate(g, order, 0, chosen,
              [&](const std::set<VertexId>& s) { total += weight_of_set(g, c, s); });
    return total;
}

Rational restricted_total_bruteforce(const Graph& g, const CardinalityState& c,
                                      const std::vector<std::pair<VertexId, int>>& constraints,
                                      const OracleLimit& limit) {
    check_cap(g, limit, "restricted_total_bruteforce");
    Rational total;
    auto order = g.vertices();
    std::set<VertexId> chosen;
    enumerate(g, order, 0, chosen, [&](const std::set<VertexId>& s) {
        for (const auto& [v, eta] : constraints) {
            bool in = s.count(v) != 0;
            if (in != (eta == 1)) return;
        }
        total += weight_of_set(g, c, s);
    });
    return total;
}

}  // namespace iscount
