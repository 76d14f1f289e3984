#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "iscount/cardinality.hpp"
#include "iscount/graph.hpp"
#include "iscount/partition.hpp"
#include "iscount/procedures.hpp"
#include "iscount/rational.hpp"
#include "iscount/stats.hpp"

namespace iscount {

struct EngineConfig {
    int small_cutoff = 20;          // below this many degree->=3 vertices, branch plainly
    Rational delta{1, 100000};      // the fixed measure perturbation
    bool collect_stats = false;     // record measure trace
    std::uint64_t rng_seed = 1;     // bisection seeding
};

/// Coefficients of the diagnostic measure. Values are exact transcriptions;
/// they never influence the computed totals.
struct MeasureWeights {
    Rational side_coeff;  // 1/5 + delta, per partition-side vertex
    Rational edge_coeff;  // 3/5, per crossing chain

    struct Band {
        Rational lo, hi;  // density interval (lo, hi]
        Rational w2, w3, w4;
    };
    std::vector<Band> density_bands;           // max degree 4
    Rational w2, w3, w4, w5, w6;               // max degree 5..6

    static MeasureWeights paper(const Rational& delta);
};

/// Diagnostic potential: partition-driven for subcubic graphs, density-banded
/// for max degree 4, fixed weights for degree 5..6, n above that.
/// Disconnected graphs sum over components.
Rational measure(const Graph& g, const Partition& p, const MeasureWeights& w);

/// The density-banded form alone (the max-degree-4 row of the measure).
Rational banded_measure(const Graph& g, const MeasureWeights& w);

/// Average-degree score used to pick degree-4 branch vertices: with
/// k = 2m/n, alpha = d(v) + #{low-degree neighbors}, beta = 1 + sum of
/// 1/d(w) over those neighbors; returns alpha/beta exactly.
Rational alpha_beta(const Graph& g, VertexId v);

enum class PolicyCase {
    cutoff,            // few degree->=3 vertices: any max-degree vertex with c1 > 0
    bisect_two_cross,  // subcubic: vertex with two crossing chains
    bisect_one_cross,  // subcubic: crossing vertex on the weakly larger side
    all_three,         // degree-3 vertex with all neighbors of degree 3
    deg4,              // degree-4 vertex maximizing alpha/beta
    high_degree,       // max-degree vertex, preferring a lower-degree neighbor
    restart,           // no crossing chain left: drop the partition and redo
};

struct Selection {
    std::optional<VertexId> vertex;  // empty iff policy == restart
    Partition partition;             // possibly restricted / rebisected / rebalanced
    PolicyCase policy = PolicyCase::cutoff;
    bool rebisected = false;
    int width = 0;  // of the fresh bisection, when rebisected
};

/// The branch-vertex policy, in order: small-graph cutoff; bisection-guided
/// subcubic rules (restrict, re-bisect if a side emptied, rebalance, then
/// two-cross > one-cross > restart); all-3-neighbors vertex; degree-4 by
/// alpha/beta; max degree preferring a smaller-degree neighbor. Ties break
/// to the smallest id.
Selection select_branch_vertex(const Graph& g, const CardinalityState& c, Partition p,
                               const EngineConfig& cfg);

/// The counting driver. One engine instance runs one count at a time;
/// stats() describes the most recent top-level count.
class Engine {
public:
    explicit Engine(EngineConfig cfg = {});

    /// Number of independent sets (trivial weights).
    Rational count(const Graph& g);
    /// Weighted total for a proper state; throws std::invalid_argument on an
    /// improper or inconsistent state.
    Rational count(const Graph& g, const CardinalityState& c);
    Rational count(const Graph& g, const CardinalityState& c, const Partition& p);

    const SearchStats& stats() const { return stats_; }
    const EngineConfig& config() const { return cfg_; }
    const MeasureWeights& weights() const { return weights_; }

private:
    struct MeasureCtx {
        bool active = false;
        long long epoch = 0;
        Rational mu;
    };

    Rational run(ReducedState st, Partition part, int depth, MeasureCtx ctx);

    EngineConfig cfg_;
    MeasureWeights weights_;
    SearchStats stats_;
    long long epoch_counter_ = 0;
};

}  // namespace iscount
