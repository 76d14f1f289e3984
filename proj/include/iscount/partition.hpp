#pragma once

#include <cstdint>
#include <set>

#include "iscount/skeleton.hpp"

namespace iscount {

/// The (V0, V1) split of the skeleton guiding branch selection.
struct Partition {
    std::set<VertexId> v0, v1;

    bool has_empty_side() const { return v0.empty() || v1.empty(); }
    int bp() const { return static_cast<int>(std::max(v0.size(), v1.size())); }
    void clear() {
        v0.clear();
        v1.clear();
    }
    bool operator==(const Partition& o) const { return v0 == o.v0 && v1 == o.v1; }
};

/// ec: number of skeleton edges (with multiplicity) crossing the split.
int cut_width(const Partition& p, const Skeleton& b);

/// Balanced split |v0| <= |v1| <= ceil(n/2) of the skeleton vertices with
/// heuristically small width: greedy random seeds refined by
/// steepest-descent swaps, best of eight deterministic attempts.
/// Requires at least two skeleton vertices.
Partition bisect(const Skeleton& b, std::uint64_t seed);

/// Both sides intersected with the current skeleton's vertex set.
Partition restrict_partition(const Partition& p, const Skeleton& b);

/// Repeatedly moves vertices whose chains all cross (three of them, or the
/// single non-loop chain of a self-adjacent vertex) to the other side; every
/// move lowers the width, so this terminates.
Partition rebalance_heavy_vertices(const Partition& p, const Skeleton& b);

}  // namespace iscount
