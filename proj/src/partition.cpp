#include "iscount/partition.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace iscount {

int cut_width(const Partition& p, const Skeleton& b) {
    int w = 0;
    for (const auto& [e, m] : b.edge_mult) {
        bool a0 = p.v0.count(e.first), a1 = p.v1.count(e.first);
        bool b0 = p.v0.count(e.second), b1 = p.v1.count(e.second);
        if ((a0 && b1) || (a1 && b0)) w += m;
    }
    return w;
}

Partition restrict_partition(const Partition& p, const Skeleton& b) {
    Partition q;
    for (VertexId v : p.v0)
        if (b.verts.count(v)) q.v0.insert(v);
    for (VertexId v : p.v1)
        if (b.verts.count(v)) q.v1.insert(v);
    return q;
}

namespace {

struct SideOf {
    const Partition& p;
    int operator()(VertexId v) const { return p.v0.count(v) ? 0 : (p.v1.count(v) ? 1 : -1); }
};

// Width change of moving v to the other side: (internal - cross) chains.
int move_gain(const Partition& p, const Skeleton& b, VertexId v, int side) {
    const auto& other = side == 0 ? p.v1 : p.v0;
    const auto& own = side == 0 ? p.v0 : p.v1;
    int cross = 0, internal = 0;
    for (const auto& [w, m] : b.neighbors(v)) {
        if (other.count(w)) cross += m;
        else if (own.count(w)) internal += m;
    }
    return cross - internal;  // positive: moving v lowers width by this much
}

void normalize(Partition& p) {
    bool swap = p.v0.size() > p.v1.size() ||
                (p.v0.size() == p.v1.size() && !p.v0.empty() && *p.v1.begin() < *p.v0.begin());
    if (swap) std::swap(p.v0, p.v1);
}

}  // namespace

Partition bisect(const Skeleton& b, std::uint64_t seed) {
    std::vector<VertexId> verts(b.verts.begin(), b.verts.end());
    const int n = static_cast<int>(verts.size());
    if (n < 2) throw std::invalid_argument("bisect: need at least two skeleton vertices");

    Partition best;
    int best_width = -1;
    for (int attempt = 0; attempt < 8; ++attempt) {
        std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + attempt + 1);
        std::vector<VertexId> order = verts;
        std::shuffle(order.begin(), order.end(), rng);

        Partition p;
        for (int i = 0; i < n / 2; ++i) p.v0.insert(order[i]);
        for (int i = n / 2; i < n; ++i) p.v1.insert(order[i]);

        // Steepest descent: best pair swap, or a balance-preserving single
        // move when the sides differ in size.
        for (;;) {
            int gain = 0;
            VertexId ma = 0, mb = 0;
            for (VertexId a : p.v0) {
                int ga = move_gain(p, b, a, 0);
                for (VertexId c : p.v1) {
                    int g = ga + move_gain(p, b, c, 1) - 2 * b.multiplicity(a, c);
                    if (g > gain) gain = g, ma = a, mb = c;
                }
            }
            if (p.v0.size() != p.v1.size()) {
                for (VertexId c : p.v1) {  // v1 is the larger side here
                    int g = move_gain(p, b, c, 1);
                    if (g > gain) gain = g, ma = 0, mb = c;
                }
            }
            if (gain <= 0) break;
            if (ma) {
                p.v0.erase(ma);
                p.v1.insert(ma);
            }
            p.v1.erase(mb);
            p.v0.insert(mb);
            if (p.v0.size() > p.v1.size()) std::swap(p.v0, p.v1);
        }

        int w = cut_width(p, b);
        if (best_width < 0 || w < best_width) {
            best_width = w;
            best = std::move(p);
        }
    }
    normalize(best);
    return best;
}

Partition rebalance_heavy_vertices(const Partition& p, const Skeleton& b) {
    Partition q = p;
    for (bool moved = true; moved;) {
        moved = false;
        for (int side = 0; side < 2 && !moved; ++side) {
            auto& own = side == 0 ? q.v0 : q.v1;
            auto& other = side == 0 ? q.v1 : q.v0;
            for (VertexId v : own) {
                int cross = 0;
                for (const auto& [w, m] : b.neighbors(v))
                    if (other.count(w)) cross += m;
                bool heavy = cross == 3 || (b.self_adjacent(v) && cross == 1);
                if (heavy) {
                    own.erase(v);
                    other.insert(v);
                    moved = true;
                    break;
                }
            }
        }
    }
    return q;
}

}  // namespace iscount
