#pragma once

#include <algorithm>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tempo/enumeration.hpp"

namespace tempo {

// One nondominated point of the two-dimensional objective space, with a
// Phase-1 label witnessing it.
struct ParetoPoint {
    Time time_value = 0;  // duration under Fastest, arrival under EarliestArrival
    Rational cost;
    LabelId witness = kNoLabel;
};

// Nondominated (time value, cost) set, sorted by time value ascending; costs
// then descend strictly (the staircase of a 2-D front).
struct ParetoFront {
    Objective objective = Objective::Fastest;
    std::vector<ParetoPoint> points;

    bool contains(Time time_value, const Rational& cost) const {
        for (const ParetoPoint& p : points)
            if (p.time_value == time_value && p.cost == cost) return true;
        return false;
    }
};

namespace detail {

inline Time label_time_value(Objective objective, const Label& l) {
    return objective == Objective::Fastest ? l.duration() : l.arrival;
}

// Nondominated points among the target's representatives; several labels can
// share one vector, so equal vectors collapse onto the earliest-created
// witness.
inline ParetoFront front_from_context(const EnumerationContext& ctx) {
    ParetoFront front;
    front.objective = ctx.objective;
    for (LabelId id : mark_nondominated(ctx)) {
        const Label& l = ctx.arena.label(id);
        const Time value = label_time_value(ctx.objective, l);
        bool known = false;
        for (ParetoPoint& p : front.points) {
            if (p.time_value == value && p.cost == l.cost) {
                p.witness = std::min(p.witness, id);
                known = true;
                break;
            }
        }
        if (!known) front.points.push_back({value, l.cost, id});
    }
    std::sort(front.points.begin(), front.points.end(),
              [](const ParetoPoint& a, const ParetoPoint& b) { return a.time_value < b.time_value; });
    return front;
}

}  // namespace detail

// The exact nondominated set over all (s,z)-paths. Zero-cost edges are
// allowed: the sweep then ranges over walks, whose nondominated vectors
// coincide with the paths' (zero-cost cycles excise without changing the
// vector). Pure; safe to call concurrently.
inline ParetoFront pareto_front(const TemporalGraph& g, VertexId s, VertexId z,
                                Objective objective) {
    g.vertex_name(s);
    g.vertex_name(z);
    if (s == z) return {objective, {}};  // no simple path returns to its start
    const EnumerationContext ctx = run_phase1(g, s, z, objective);
    return detail::front_from_context(ctx);
}

// Decides whether the given (s,z)-path is efficient by membership of its
// vector in the front.
inline bool is_efficient(const TemporalGraph& g, VertexId s, VertexId z, Objective objective,
                         std::span<const EdgeId> edge_ids) {
    const PathRecord record = validate_path(g, edge_ids);
    if (g.edge(edge_ids.front()).src != s || g.edge(edge_ids.back()).dst != z)
        throw Error("not an (s,z)-path: endpoints differ");
    const ParetoFront front = pareto_front(g, s, z, objective);
    return front.contains(time_value(objective, record), record.cost);
}

// Decides whether some (s,z)-path P has time value <= time_bound and
// cost <= cost_bound.
inline bool exists_within(const TemporalGraph& g, VertexId s, VertexId z, Objective objective,
                          const Rational& cost_bound, Time time_bound) {
    if (cost_bound < 0 || time_bound < 0) throw Error("bounds must be nonnegative");
    const ParetoFront front = pareto_front(g, s, z, objective);
    for (const ParetoPoint& p : front.points)
        if (p.time_value <= time_bound && p.cost <= cost_bound) return true;
    return false;
}

// Excises every revisit segment from a temporal walk in one left-to-right
// scan. Each removed segment must have cost zero (anything else throws: a
// positive-cost cycle cannot sit on a witness of a nondominated point). The
// result is a simple path with the same endpoints, arrival and cost.
inline std::vector<EdgeId> remove_zero_cost_cycles(const TemporalGraph& g,
                                                   std::span<const EdgeId> ids) {
    if (ids.empty()) return {};
    std::vector<EdgeId> result;
    std::unordered_map<VertexId, std::size_t> position;  // vertex -> #edges before it
    position.emplace(g.edge(ids.front()).src, 0);
    for (EdgeId id : ids) {
        const TemporalEdge& e = g.edge(id);
        auto it = position.find(e.dst);
        if (it != position.end()) {
            Rational dropped = e.cost;
            while (result.size() > it->second) {
                dropped += g.edge(result.back()).cost;
                position.erase(g.edge(result.back()).dst);
                result.pop_back();
            }
            if (dropped != 0) throw Error("walk contains a positive-cost cycle");
        } else {
            result.push_back(id);
            position.emplace(e.dst, result.size());
        }
    }
    return result;
}

// One efficient path per nondominated point: the output procedure runs from
// the point's witness and stops after its first emission; a witness that is
// a walk (possible with zero-cost edges) has its cycles excised. Every
// returned path is simple and carries exactly its point's vector.
inline std::vector<PathRecord> representative_paths(const TemporalGraph& g, VertexId s, VertexId z,
                                                    Objective objective) {
    g.vertex_name(s);
    g.vertex_name(z);
    std::vector<PathRecord> result;
    if (s == z) return result;
    const EnumerationContext ctx = run_phase1(g, s, z, objective);
    const ParetoFront front = detail::front_from_context(ctx);
    for (const ParetoPoint& point : front.points) {
        std::vector<EdgeId> first;
        bool found = false;
        EnumerationStats scratch;
        output_paths(ctx, point.witness,
                     [&](const PathRecord& record) {
                         first = record.edge_ids;
                         found = true;
                         return false;  // first emission only
                     },
                     scratch);
        if (!found) throw Error("no walk reconstructed for a nondominated point");
        const PathRecord record = validate_path(g, remove_zero_cost_cycles(g, first));
        if (time_value(objective, record) != point.time_value || record.cost != point.cost)
            throw Error("representative path does not match its nondominated point");
        result.push_back(record);
    }
    return result;
}

// Text form of a front: one `f=<time> c=<cost>` line per point.
inline std::string serialize_front(const ParetoFront& front) {
    std::ostringstream out;
    for (const ParetoPoint& p : front.points)
        out << "f=" << p.time_value << " c=" << format_rational(p.cost) << '\n';
    return out.str();
}

}  // namespace tempo
