#pragma once

#include <string>
#include <vector>

#include "tempo/temporal_graph.hpp"

namespace tempo {

// Default cap on instance size for the brute-force helpers below. They are
// deliberately naive ground truth for differential testing, exponential in
// the worst case.
inline constexpr std::size_t kOracleVertexGuard = 12;

namespace detail {

inline void check_oracle_guard(const TemporalGraph& g, std::size_t max_vertices) {
    if (g.vertex_count() > max_vertices)
        throw SizeGuardError("instance has " + std::to_string(g.vertex_count()) +
                             " vertices, above the brute-force cap of " +
                             std::to_string(max_vertices));
}

template <class Visit>
void dfs_paths(const TemporalGraph& g, VertexId current, VertexId target, Time ready,
               std::vector<EdgeId>& stack, std::vector<char>& visited, Visit& visit) {
    for (EdgeId id : g.out_edges(current)) {
        const TemporalEdge& e = g.edge(id);
        if (e.t < ready || visited[e.dst]) continue;
        stack.push_back(id);
        if (e.dst == target) {
            visit(stack);
        } else {
            visited[e.dst] = 1;
            dfs_paths(g, e.dst, target, e.arrival(), stack, visited, visit);
            visited[e.dst] = 0;
        }
        stack.pop_back();
    }
}

template <class Visit>
void dfs_walks(const TemporalGraph& g, VertexId current, VertexId target, Time ready,
               std::size_t max_len, std::vector<EdgeId>& stack, std::vector<char>& used,
               Visit& visit) {
    if (stack.size() == max_len) return;
    for (EdgeId id : g.out_edges(current)) {
        const TemporalEdge& e = g.edge(id);
        if (e.t < ready || used[id]) continue;
        stack.push_back(id);
        used[id] = 1;
        if (e.dst == target) visit(stack);
        dfs_walks(g, e.dst, target, e.arrival(), max_len, stack, used, visit);
        used[id] = 0;
        stack.pop_back();
    }
}

}  // namespace detail

// Visits every simple temporal (s,z)-path once, in lexicographic order of
// edge-id sequences (out-edges are explored in stream order).
template <class Visit>
void for_each_temporal_path(const TemporalGraph& g, VertexId s, VertexId z, Visit&& visit,
                            std::size_t max_vertices = kOracleVertexGuard) {
    detail::check_oracle_guard(g, max_vertices);
    g.vertex_name(s);
    g.vertex_name(z);
    if (s == z) return;
    std::vector<EdgeId> stack;
    std::vector<char> visited(g.vertex_count(), 0);
    visited[s] = 1;
    detail::dfs_paths(g, s, z, 0, stack, visited, visit);
}

inline std::vector<PathRecord> all_temporal_paths(const TemporalGraph& g, VertexId s, VertexId z,
                                                  std::size_t max_vertices = kOracleVertexGuard) {
    std::vector<PathRecord> paths;
    for_each_temporal_path(
        g, s, z,
        [&](const std::vector<EdgeId>& ids) { paths.push_back(detail::record_from_ids(g, ids)); },
        max_vertices);
    return paths;
}

// All temporal (s,z)-walks of at most `max_len` edges. Vertices may repeat;
// an edge id cannot (an edge departs at one fixed time), which keeps the walk
// space finite. Requires max_len <= edge count.
inline std::vector<WalkRecord> all_temporal_walks(const TemporalGraph& g, VertexId s, VertexId z,
                                                  std::size_t max_len,
                                                  std::size_t max_vertices = kOracleVertexGuard) {
    detail::check_oracle_guard(g, max_vertices);
    if (max_len > g.edge_count())
        throw Error("walk length cap exceeds the number of edges");
    g.vertex_name(s);
    g.vertex_name(z);
    std::vector<WalkRecord> walks;
    if (max_len == 0) return walks;
    std::vector<EdgeId> stack;
    std::vector<char> used(g.edge_count(), 0);
    auto visit = [&](const std::vector<EdgeId>& ids) {
        walks.push_back(detail::record_from_ids(g, ids));
    };
    detail::dfs_walks(g, s, z, 0, max_len, stack, used, visit);
    return walks;
}

// Keeps exactly the records whose objective vector no other record's vector
// dominates. Comparison code independent of the label-setting machinery:
// this is the ground truth it gets checked against. Order-preserving,
// idempotent; all records must share endpoints.
inline std::vector<PathRecord> efficient_filter(std::vector<PathRecord> records,
                                                Objective objective) {
    auto dominates_record = [&](const PathRecord& a, const PathRecord& b) {
        const Time fa = time_value(objective, a);
        const Time fb = time_value(objective, b);
        return fa <= fb && a.cost <= b.cost && (fa < fb || a.cost < b.cost);
    };
    std::vector<PathRecord> efficient;
    for (const PathRecord& candidate : records) {
        bool dominated = false;
        for (const PathRecord& other : records) {
            if (dominates_record(other, candidate)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) efficient.push_back(candidate);
    }
    return efficient;
}

}  // namespace tempo
