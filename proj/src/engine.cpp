#include "iscount/engine.hpp"

#include <algorithm>
#include <cassert>

#include "iscount/connectivity.hpp"

namespace iscount {

MeasureWeights MeasureWeights::paper(const Rational& delta) {
    MeasureWeights w;
    w.side_coeff = Rational(1, 5) + delta;
    w.edge_coeff = Rational(3, 5);
    w.density_bands = {
        {Rational(2), Rational(3), Rational(23855, 1000000), Rational(188173, 1000000),
         Rational(331455, 1000000)},
        {Rational(3), Rational(16, 5), Rational(68596, 1000000), Rational(188173, 1000000),
         Rational(286715, 1000000)},
        {Rational(16, 5), Rational(76, 21), Rational(81402, 1000000), Rational(190308, 1000000),
         Rational(278178, 1000000)},
        {Rational(76, 21), Rational(15, 4), Rational(93788, 1000000), Rational(194436, 1000000),
         Rational(274050, 1000000)},
        {Rational(15, 4), Rational(4), Rational(108682, 1000000), Rational(200820, 1000000),
         Rational(271922, 1000000)},
    };
    w.w2 = Rational(113664, 1000000);
    w.w3 = Rational(200821, 1000000);
    w.w4 = Rational(271940, 1000000);
    w.w5 = Rational(298566, 1000000);
    w.w6 = Rational(306690, 1000000);
    return w;
}

Rational banded_measure(const Graph& g, const MeasureWeights& w) {
    if (g.empty()) return Rational(0);
    Rational density(2L * g.num_edges(), g.num_vertices());
    const MeasureWeights::Band* band = &w.density_bands.front();
    for (const auto& b : w.density_bands)
        if (density > b.lo) band = &b;
    return band->w2 * Rational(g.count_degree(2)) + band->w3 * Rational(g.count_degree(3)) +
           band->w4 * Rational(g.count_degree(4));
}

Rational measure(const Graph& g, const Partition& p, const MeasureWeights& w) {
    if (g.empty()) return Rational(0);
    auto comps = components(g);
    if (comps.size() > 1) {
        Rational total;
        for (const auto& comp : comps) {
            Graph sub = g.induced(comp);
            Partition q;
            for (VertexId v : p.v0)
                if (comp.count(v)) q.v0.insert(v);
            for (VertexId v : p.v1)
                if (comp.count(v)) q.v1.insert(v);
            total += measure(sub, q, w);
        }
        return total;
    }
    int dmax = g.max_degree();
    if (dmax <= 3) {
        Skeleton b = skeleton(g);
        Partition q = restrict_partition(p, b);
        if (!q.v0.empty() && !q.v1.empty())
            return w.side_coeff * Rational(q.bp()) + w.edge_coeff * Rational(cut_width(q, b));
        return w.side_coeff * Rational(g.count_degree(3));
    }
    if (dmax == 4) return banded_measure(g, w);
    if (dmax <= 6)
        return w.w2 * Rational(g.count_degree(2)) + w.w3 * Rational(g.count_degree(3)) +
               w.w4 * Rational(g.count_degree(4)) + w.w5 * Rational(g.count_degree(5)) +
               w.w6 * Rational(g.count_degree(6));
    return Rational(g.num_vertices());
}

Rational alpha_beta(const Graph& g, VertexId v) {
    if (g.degree(v) < 1) throw std::invalid_argument("alpha_beta: isolated vertex");
    Rational k(2L * g.num_edges(), g.num_vertices());
    long alpha = g.degree(v);
    Rational beta(1);
    for (VertexId u : g.neighbors(v)) {
        if (Rational(g.degree(u)) < k) {
            ++alpha;
            beta += Rational(1, g.degree(u));
        }
    }
    return Rational(alpha) / beta;
}

namespace {

int cross_chains(const Skeleton& b, const Partition& p, VertexId v, int side) {
    const auto& other = side == 0 ? p.v1 : p.v0;
    int cross = 0;
    for (const auto& [w, m] : b.neighbors(v))
        if (other.count(w)) cross += m;
    return cross;
}

VertexId pick_max_degree(const Graph& g, const CardinalityState& c) {
    int dmax = g.max_degree();
    VertexId fallback = 0;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != dmax) continue;
        if (c.c1.at(v).sign() > 0) return v;
        if (!fallback) fallback = v;
    }
    return fallback;  // only added vertices left at max degree
}

VertexId find_all_three(const Graph& g) {
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        bool all3 = true;
        for (VertexId u : g.neighbors(v))
            if (g.degree(u) != 3) {
                all3 = false;
                break;
            }
        if (all3) return v;
    }
    return 0;
}

}  // namespace

Selection select_branch_vertex(const Graph& g, const CardinalityState& c, Partition p,
                               const EngineConfig& cfg) {
    Selection sel;
    if (g.count_degree_at_least(3) <= cfg.small_cutoff) {
        sel.vertex = pick_max_degree(g, c);
        sel.policy = PolicyCase::cutoff;
        sel.partition = std::move(p);
        return sel;
    }

    int dmax = g.max_degree();
    if (dmax == 3) {
        VertexId all3 = find_all_three(g);
        if (all3) {
            sel.vertex = all3;
            sel.policy = PolicyCase::all_three;
            sel.partition = std::move(p);
            return sel;
        }
        Skeleton b = skeleton(g);
        p = restrict_partition(p, b);
        if (p.has_empty_side()) {
            p = bisect(b, cfg.rng_seed);
            sel.rebisected = true;
            sel.width = cut_width(p, b);
        }
        p = rebalance_heavy_vertices(p, b);

        // two crossing chains: either two distinct cross neighbors or one
        // cross neighbor reached by two parallel chains
        VertexId two = 0;
        for (VertexId v : b.verts) {
            int side = p.v0.count(v) ? 0 : (p.v1.count(v) ? 1 : -1);
            if (side < 0) continue;
            if (cross_chains(b, p, v, side) == 2) {
                two = v;
                break;
            }
        }
        if (two) {
            sel.vertex = two;
            sel.policy = PolicyCase::bisect_two_cross;
            sel.partition = std::move(p);
            return sel;
        }

        // any crossing vertex on the weakly larger side
        VertexId one = 0;
        for (VertexId v : b.verts) {
            int side = p.v0.count(v) ? 0 : (p.v1.count(v) ? 1 : -1);
            if (side < 0) continue;
            const auto& own = side == 0 ? p.v0 : p.v1;
            const auto& other = side == 0 ? p.v1 : p.v0;
            if (own.size() < other.size()) continue;
            if (cross_chains(b, p, v, side) > 0) {
                one = v;
                break;
            }
        }
        if (one) {
            sel.vertex = one;
            sel.policy = PolicyCase::bisect_one_cross;
            sel.partition = std::move(p);
            return sel;
        }

        sel.policy = PolicyCase::restart;
        sel.partition = std::move(p);
        return sel;
    }

    if (dmax == 4) {
        VertexId best = 0;
        Rational best_score;
        for (VertexId v : g.vertices()) {
            if (g.degree(v) != 4) continue;
            Rational s = alpha_beta(g, v);
            if (!best || s > best_score) {
                best = v;
                best_score = s;
            }
        }
        sel.vertex = best;
        sel.policy = PolicyCase::deg4;
        sel.partition = std::move(p);
        return sel;
    }

    VertexId pick = 0, fallback = 0;
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != dmax) continue;
        if (!fallback) fallback = v;
        bool lower = false;
        for (VertexId u : g.neighbors(v))
            if (g.degree(u) < dmax) {
                lower = true;
                break;
            }
        if (lower) {
            pick = v;
            break;
        }
    }
    sel.vertex = pick ? pick : fallback;
    sel.policy = PolicyCase::high_degree;
    sel.partition = std::move(p);
    return sel;
}

Engine::Engine(EngineConfig cfg) : cfg_(std::move(cfg)), weights_(MeasureWeights::paper(cfg_.delta)) {
    if (cfg_.small_cutoff < 2) throw std::invalid_argument("small_cutoff must be at least 2");
    if (cfg_.delta.sign() <= 0) throw std::invalid_argument("delta must be positive");
}

Rational Engine::count(const Graph& g) { return count(g, trivial_cardinality(g)); }

Rational Engine::count(const Graph& g, const CardinalityState& c) {
    return count(g, c, Partition{});
}

Rational Engine::count(const Graph& g, const CardinalityState& c, const Partition& p) {
    if (!state_consistent(g, c))
        throw std::invalid_argument("count: state does not match graph");
    if (!is_proper(g, c)) throw std::invalid_argument("count: improper cardinality function");
    stats_ = SearchStats{};
    epoch_counter_ = 0;
    return run(ReducedState{g, c}, p, 0, MeasureCtx{});
}

Rational Engine::run(ReducedState st, Partition part, int depth, MeasureCtx ctx) {
    stats_.max_depth = std::max(stats_.max_depth, depth);
    for (;;) {
        ++stats_.branch_nodes;
        reduction(st, &stats_);

        if (st.graph.empty()) return st.card.scalar;
        if (st.graph.num_vertices() == 1) {
            VertexId v = st.graph.vertices().front();
            return st.card.scalar * (st.card.c1.at(v) + st.card.c0v.at(v));
        }

        if (part.has_empty_side()) {
            auto subcount = [this, depth](const Graph& g, const CardinalityState& c) {
                return run(ReducedState{g, c}, Partition{}, depth + 1, MeasureCtx{});
            };

            for (;;) {  // D0: peel components, smallest n_{>=3} first
                auto comps = components(st.graph);
                if (comps.size() <= 1) break;
                const std::set<VertexId>* best = nullptr;
                int best_n3 = -1;
                for (const auto& comp : comps) {
                    int n3 = 0;
                    for (VertexId w : comp) n3 += st.graph.degree(w) >= 3;
                    if (!best || n3 < best_n3) {
                        best = &comp;
                        best_n3 = n3;
                    }
                }
                d0(st, *best, subcount, &stats_);
            }

            for (;;) {  // D1: split at the smallest cut vertex
                auto cuts = cut_vertices(st.graph);
                if (cuts.empty()) break;
                VertexId v = *cuts.begin();
                Graph rest = st.graph;
                rest.remove_vertex(v);
                auto comps = components(rest);
                const std::set<VertexId>* best = nullptr;
                int best_n3 = -1;
                for (const auto& comp : comps) {
                    int n3 = 0;
                    for (VertexId w : comp) {
                        int d = 0;
                        for (VertexId t : rest.neighbors(w)) d += comp.count(t);
                        n3 += d >= 3;
                    }
                    if (!best || n3 < best_n3) {
                        best = &comp;
                        best_n3 = n3;
                    }
                }
                std::set<VertexId> g1 = *best;
                g1.insert(v);
                d1(st, v, g1, subcount, &stats_);
            }

            for (;;) {  // D2: split at the smallest qualifying two-cut
                auto sp = find_separating_pair(st.graph);
                if (!sp) break;
                // component with the smallest positive number of inner
                // degree->=3 vertices; fall back to the fewest vertices of
                // degree 3 in G when no part has any
                const std::set<VertexId>* best = nullptr;
                int best_key = -1;
                for (const auto& comp : sp->parts) {
                    int n3 = 0;
                    for (VertexId w : comp) {
                        int d = 0;
                        for (VertexId t : st.graph.neighbors(w)) d += comp.count(t);
                        n3 += d >= 3;
                    }
                    if (n3 > 0 && (best_key < 0 || n3 < best_key)) {
                        best = &comp;
                        best_key = n3;
                    }
                }
                if (!best) {
                    for (const auto& comp : sp->parts) {
                        int deg3 = 0;
                        for (VertexId w : comp) deg3 += st.graph.degree(w) == 3;
                        if (deg3 > 0 && (best_key < 0 || deg3 < best_key)) {
                            best = &comp;
                            best_key = deg3;
                        }
                    }
                }
                if (!best) break;
                std::set<VertexId> g1 = *best;
                g1.insert(sp->u);
                g1.insert(sp->v);
                try {
                    d2(st, sp->u, sp->v, g1, subcount, &stats_);
                } catch (const DegenerateCutError&) {
                    ++stats_.degenerate_cuts;
                    break;
                }
            }
        }

        Selection sel = select_branch_vertex(st.graph, st.card, std::move(part), cfg_);
        if (sel.rebisected) {
            ++stats_.bisections;
            stats_.widths.push_back(sel.width);
            ++epoch_counter_;
        }
        part = std::move(sel.partition);

        if (sel.policy == PolicyCase::restart) {
            ++stats_.restarts;
            part.clear();
            ctx = MeasureCtx{};
            continue;
        }

        VertexId v = *sel.vertex;
        switch (sel.policy) {
            case PolicyCase::cutoff: ++stats_.sel_cutoff; break;
            case PolicyCase::bisect_two_cross: ++stats_.sel_two_cross; break;
            case PolicyCase::bisect_one_cross: ++stats_.sel_one_cross; break;
            case PolicyCase::all_three: ++stats_.sel_all_three; break;
            case PolicyCase::deg4: ++stats_.sel_deg4; break;
            case PolicyCase::high_degree: ++stats_.sel_high_degree; break;
            default: break;
        }

        if (sel.policy == PolicyCase::bisect_two_cross ||
            sel.policy == PolicyCase::bisect_one_cross) {
            long long epoch = sel.rebisected || !ctx.active ? epoch_counter_ : ctx.epoch;
            Rational mu = measure(st.graph, part, weights_);
            if (cfg_.collect_stats && stats_.measure_trace.size() < kMeasureTraceCap)
                stats_.measure_trace.emplace_back(depth, mu);
            if (ctx.active && epoch == ctx.epoch && !(mu < ctx.mu)) ++stats_.measure_violations;
            ctx = MeasureCtx{true, epoch, mu};
        }

        ++stats_.branchings;
        ReducedState taken = st;
        prop(taken, v, 1);
        Rational total = run(std::move(taken), part, depth + 1, ctx);
        prop(st, v, 0);
        total += run(std::move(st), part, depth + 1, ctx);
        return total;
    }
}

}  // namespace iscount
