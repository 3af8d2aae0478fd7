#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "tempo/labels.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

struct EnumerationStats {
    std::size_t labels_created = 0;
    std::size_t phase2_steps = 0;     // output-procedure invocations
    std::size_t max_delay_steps = 0;  // longest step gap before/between/after emissions
};

struct EnumerationSummary {
    std::uint64_t paths = 0;
    bool stopped_early = false;
    EnumerationStats stats;
};

// Phase 1 result: per-vertex representative sets over one label arena. One
// context is single-threaded; independent contexts over the same graph may
// run concurrently.
struct EnumerationContext {
    const TemporalGraph* graph = nullptr;
    VertexId source = 0;
    VertexId target = 0;
    Objective objective = Objective::Fastest;
    LabelArena arena;
    std::vector<RepSet> reps;
    LabelId initial_label = kNoLabel;
};

namespace detail {

// Candidates at the tail of an edge: among representatives that have already
// arrived, the cheapest one per distinct starting time (ties by arrival,
// then id, for reproducible runs).
inline void select_candidates(const LabelArena& arena, const RepSet& reps, Time departure,
                              std::vector<LabelId>& out) {
    out.clear();
    for (LabelId id : reps.representatives())
        if (arena.label(id).arrival <= departure) out.push_back(id);
    std::sort(out.begin(), out.end(), [&](LabelId a, LabelId b) {
        const Label& la = arena.label(a);
        const Label& lb = arena.label(b);
        if (la.start != lb.start) return la.start < lb.start;
        if (la.cost != lb.cost) return la.cost < lb.cost;
        if (la.arrival != lb.arrival) return la.arrival < lb.arrival;
        return a < b;
    });
    std::size_t kept = 0;
    for (std::size_t i = 0; i < out.size(); ++i)
        if (kept == 0 || arena.label(out[i]).start != arena.label(out[kept - 1]).start)
            out[kept++] = out[i];
    out.resize(kept);
}

// A zero-traversal edge arrives within its own availability step, so it can
// feed other edges of the same step. Orders one equal-time block so that
// every such feeder precedes its dependents (stable: lowest stream position
// among the ready edges first). Edges on a directed zero-traversal cycle
// admit no such order and are returned in `stuck`, together with everything
// downstream of them.
inline void block_feed_order(std::span<const TemporalEdge> block, std::vector<EdgeId>& ordered,
                             std::vector<EdgeId>& stuck) {
    ordered.clear();
    stuck.clear();
    const std::size_t k = block.size();
    bool any_zero = false;
    for (const TemporalEdge& e : block) any_zero = any_zero || e.lambda == 0;
    if (!any_zero) {  // the common case: nothing chains inside one step
        for (const TemporalEdge& e : block) ordered.push_back(e.id);
        return;
    }
    std::vector<std::size_t> pending(k, 0);  // unprocessed feeders per edge
    std::vector<char> done(k, 0);
    for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b)
            if (a != b && block[a].lambda == 0 && block[a].dst == block[b].src) ++pending[b];
    for (std::size_t round = 0; round < k; ++round) {
        std::size_t next = k;
        for (std::size_t i = 0; i < k; ++i)
            if (!done[i] && pending[i] == 0) {
                next = i;
                break;
            }
        if (next == k) break;
        done[next] = 1;
        ordered.push_back(block[next].id);
        if (block[next].lambda == 0)
            for (std::size_t b = 0; b < k; ++b)
                if (!done[b] && block[next].dst == block[b].src) --pending[b];
    }
    for (std::size_t i = 0; i < k; ++i)
        if (!done[i]) stuck.push_back(block[i].id);
}

}  // namespace detail

// Phase 1: one label-setting sweep over the edge stream. Every edge pushes
// the candidate labels at its tail across and inserts them with pruning.
// Under the duration objective, an edge leaving the source starts one fresh
// label instead (a path may begin at any departure time); all fresh starts
// of an edge coincide in (start, arrival, cost), so a single push rooted at
// the initial label represents them. Under the arrival objective every walk
// formally starts at time 0, which is exactly the initial label's start.
//
// Edges are taken in stream order except inside one equal-time block, where
// zero-traversal feeders are processed before the edges they feed; otherwise
// a same-step continuation would miss the label it extends. The rare residue
// of zero-traversal cycles is iterated to a fixpoint, deduplicated per
// (edge, candidate class) since equivalent candidates push identical labels.
inline EnumerationContext run_phase1(const TemporalGraph& g, VertexId s, VertexId z,
                                     Objective objective) {
    g.vertex_name(s);  // validate ids
    g.vertex_name(z);
    EnumerationContext ctx;
    ctx.graph = &g;
    ctx.source = s;
    ctx.target = z;
    ctx.objective = objective;
    ctx.reps.reserve(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) ctx.reps.emplace_back(v);
    ctx.initial_label = ctx.arena.make_initial(s);
    ctx.reps[s].insert_with_pruning(ctx.arena, ctx.initial_label);

    const bool restart_at_source = objective == Objective::Fastest;
    std::vector<LabelId> candidates;
    std::set<std::pair<EdgeId, ClassId>> pushed_classes;

    auto process_edge = [&](const TemporalEdge& e, bool dedupe) {
        bool created = false;
        if (restart_at_source && e.src == s) {
            if (dedupe &&
                !pushed_classes.insert({e.id, ctx.arena.label(ctx.initial_label).cls}).second)
                return false;
            const LabelId fresh = ctx.arena.push(ctx.initial_label, e, true);
            ctx.reps[e.dst].insert_with_pruning(ctx.arena, fresh);
            return true;
        }
        detail::select_candidates(ctx.arena, ctx.reps[e.src], e.t, candidates);
        for (LabelId candidate : candidates) {
            if (dedupe &&
                !pushed_classes.insert({e.id, ctx.arena.label(candidate).cls}).second)
                continue;
            const LabelId pushed = ctx.arena.push(candidate, e, false);
            ctx.reps[e.dst].insert_with_pruning(ctx.arena, pushed);
            created = true;
        }
        return created;
    };

    const std::span<const TemporalEdge> edges = g.edges();
    std::vector<EdgeId> ordered;
    std::vector<EdgeId> stuck;
    std::size_t begin = 0;
    while (begin < edges.size()) {
        std::size_t end = begin + 1;
        while (end < edges.size() && edges[end].t == edges[begin].t) ++end;
        detail::block_feed_order(edges.subspan(begin, end - begin), ordered, stuck);
        for (EdgeId id : ordered) process_edge(g.edge(id), false);
        if (!stuck.empty()) {
            pushed_classes.clear();
            bool progress = true;
            while (progress) {
                progress = false;
                for (EdgeId id : stuck)
                    if (process_edge(g.edge(id), true)) progress = true;
            }
        }
        begin = end;
    }
    return ctx;
}

// Phase 2 marking: representatives at the target whose (duration, cost) no
// other representative there dominates, in representative order. The initial
// label never counts as a path.
inline std::vector<LabelId> mark_nondominated(const EnumerationContext& ctx) {
    const RepSet& target_reps = ctx.reps[ctx.target];
    std::vector<LabelId> marked;
    for (LabelId id : target_reps.representatives()) {
        const Label& l = ctx.arena.label(id);
        if (l.is_initial()) continue;
        bool dominated = false;
        for (LabelId other : target_reps.representatives()) {
            if (other == id || ctx.arena.label(other).is_initial()) continue;
            if (dominates(ctx.arena.label(other), l)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) marked.push_back(id);
    }
    return marked;
}

namespace detail {

struct PrefixNode {
    EdgeId edge;
    const PrefixNode* parent;
};

// `Emit` receives the deepest prefix node and returns false to stop. The
// prefix grows immutably down the recursion, so sibling branches never see
// each other's edges.
template <class Emit>
bool output_paths_rec(const EnumerationContext& ctx, const Label& l, const PrefixNode* suffix,
                      Emit& emit, EnumerationStats& stats) {
    ++stats.phase2_steps;
    const PrefixNode here{l.edge, suffix};
    const PrefixNode* chain = l.is_initial() ? suffix : &here;
    if (l.is_initial()) return emit(chain);
    const Label& pred = ctx.arena.label(l.pred);
    const EquivClass& c = ctx.arena.cls(pred.cls);
    for (LabelId member : c.members) {
        const Label& m = ctx.arena.label(member);
        // Only class members that have arrived before this label's edge
        // departs can precede it on a feasible walk.
        if (m.arrival > l.prev_edge_time) continue;
        if (!output_paths_rec(ctx, m, chain, emit, stats)) return false;
    }
    return true;
}

inline std::vector<EdgeId> chain_to_ids(const PrefixNode* chain) {
    std::vector<EdgeId> ids;
    for (const PrefixNode* node = chain; node != nullptr; node = node->parent)
        ids.push_back(node->edge);
    return ids;  // the deepest node holds the first edge, so order is already front-to-back
}

template <class Consumer>
bool invoke_consumer(Consumer& consumer, const PathRecord& record) {
    if constexpr (std::is_void_v<decltype(consumer(record))>) {
        consumer(record);
        return true;
    } else {
        return static_cast<bool>(consumer(record));
    }
}

}  // namespace detail

// Recursive backtracking from one label: prepends the label's edge, then
// follows every feasible member of the predecessor's class; emits a finished
// record at the initial label. Streams results without holding them.
template <class Consumer>
bool output_paths(const EnumerationContext& ctx, LabelId start, Consumer&& consumer,
                  EnumerationStats& stats) {
    auto emit = [&](const detail::PrefixNode* chain) {
        return detail::invoke_consumer(consumer,
                                       detail::record_from_ids(*ctx.graph,
                                                               detail::chain_to_ids(chain)));
    };
    return detail::output_paths_rec(ctx, ctx.arena.label(start), nullptr, emit, stats);
}

namespace detail {

// Shared Phase 2 driver: marks the target's nondominated representatives and
// backtracks from every minimal-arrival member of their classes.
template <class Emit>
EnumerationSummary run_phase2(const EnumerationContext& ctx, Emit&& emit) {
    EnumerationSummary summary;
    summary.stats.labels_created = ctx.arena.labels_created();
    std::size_t steps_at_last_event = 0;
    bool keep_going = true;

    auto emit_record = [&](const PrefixNode* chain) {
        PathRecord record = record_from_ids(*ctx.graph, chain_to_ids(chain));
        const std::size_t gap = summary.stats.phase2_steps - steps_at_last_event;
        summary.stats.max_delay_steps = std::max(summary.stats.max_delay_steps, gap);
        steps_at_last_event = summary.stats.phase2_steps;
        ++summary.paths;
        if (!invoke_consumer(emit, record)) {
            summary.stopped_early = true;
            return false;
        }
        return true;
    };

    for (LabelId marked : mark_nondominated(ctx)) {
        if (!keep_going) break;
        const Label& rep = ctx.arena.label(marked);
        const EquivClass& c = ctx.arena.cls(rep.cls);
        for (LabelId member : c.members) {
            if (!keep_going) break;
            const Label& m = ctx.arena.label(member);
            if (m.arrival != rep.arrival) continue;  // representatives have minimal arrival
            keep_going = output_paths_rec(ctx, m, nullptr, emit_record, summary.stats);
        }
    }
    const std::size_t tail = summary.stats.phase2_steps - steps_at_last_event;
    summary.stats.max_delay_steps = std::max(summary.stats.max_delay_steps, tail);
    return summary;
}

}  // namespace detail

// Streams exactly the efficient (s,z)-paths under `objective` to `consumer`,
// one at a time; the consumer may return false to stop early. Requires
// strictly positive edge costs. The consumer is invoked synchronously.
template <class Consumer>
EnumerationSummary enumerate_efficient_paths(const TemporalGraph& g, VertexId s, VertexId z,
                                             Objective objective, Consumer&& consumer) {
    if (g.has_zero_cost())
        throw ZeroCostError(
            "graph has a zero-cost edge: enumeration would emit walks; "
            "query the Pareto front instead");
    g.vertex_name(s);
    g.vertex_name(z);
    if (s == z) return {};  // a path has at least one edge and cannot revisit its start
    const EnumerationContext ctx = run_phase1(g, s, z, objective);
    return detail::run_phase2(ctx, std::forward<Consumer>(consumer));
}

// Differential backend for the arrival objective: adds the super source,
// runs the duration objective from it and strips the gadget edge from every
// emission. Produces exactly the same set as the direct arrival-objective
// run; kept as an independently routed implementation for cross-checking.
template <class Consumer>
EnumerationSummary enumerate_earliest_arrival_via_super_source(const TemporalGraph& g, VertexId s,
                                                               VertexId z, Consumer&& consumer) {
    if (g.has_zero_cost())
        throw ZeroCostError(
            "graph has a zero-cost edge: enumeration would emit walks; "
            "query the Pareto front instead");
    g.vertex_name(s);
    g.vertex_name(z);
    if (s == z) return {};
    const SuperSourceInstance instance = add_super_source(g, s);
    const EnumerationContext ctx =
        run_phase1(instance.graph, instance.super_source, z, Objective::Fastest);
    auto strip = [&](const PathRecord& record) {
        if (record.edge_ids.empty() || record.edge_ids.front() != 0)
            throw Error("reduction invariant broken: emission does not start with the gadget edge");
        std::vector<EdgeId> ids;
        ids.reserve(record.edge_ids.size() - 1);
        for (std::size_t i = 1; i < record.edge_ids.size(); ++i)
            ids.push_back(record.edge_ids[i] - 1);
        return detail::invoke_consumer(consumer, detail::record_from_ids(g, std::move(ids)));
    };
    return detail::run_phase2(ctx, strip);
}

}  // namespace tempo
