#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tempo/oracle.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// Path counts grow super-exponentially, so they are kept exact and unbounded.
using BigCount = BigInt;

// Static directed graph for the path-counting reduction. No self-loops, no
// duplicate edges.
class StaticDigraph {
public:
    StaticDigraph() = default;

    explicit StaticDigraph(std::vector<std::pair<std::string, std::string>> edge_names,
                           std::vector<std::string> vertex_names = {}) {
        for (std::string& name : vertex_names) intern(std::move(name), true);
        const bool fixed_vertices = !names_.empty();
        std::set<std::pair<VertexId, VertexId>> seen;
        for (auto& [src, dst] : edge_names) {
            if (src == dst) throw ParseError("self-loop edge at vertex '" + src + "'");
            const VertexId u = fixed_vertices ? require(src) : intern(std::move(src), false);
            const VertexId v = fixed_vertices ? require(dst) : intern(std::move(dst), false);
            if (!seen.insert({u, v}).second)
                throw ParseError("duplicate edge " + names_[u] + " -> " + names_[v]);
            edges_.push_back({u, v});
        }
        out_.resize(names_.size());
        for (const auto& [u, v] : edges_) out_[u].push_back(v);
    }

    // Text format: one `src dst` pair per line; `#` comments and blank lines
    // are ignored.
    static StaticDigraph parse(std::string_view text) {
        std::vector<std::pair<std::string, std::string>> edges;
        std::size_t line_no = 0;
        std::istringstream in{std::string(text)};
        std::string line;
        while (std::getline(in, line)) {
            ++line_no;
            std::istringstream fields(line);
            std::string src, dst, extra;
            if (!(fields >> src) || src.front() == '#') continue;
            if (!(fields >> dst) || (fields >> extra))
                throw ParseError("line " + std::to_string(line_no) + ": expected 'src dst'");
            edges.emplace_back(std::move(src), std::move(dst));
        }
        return StaticDigraph(std::move(edges));
    }

    std::string serialize() const {
        std::ostringstream out;
        for (const auto& [u, v] : edges_) out << names_[u] << ' ' << names_[v] << '\n';
        return out.str();
    }

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    std::span<const std::pair<VertexId, VertexId>> edges() const { return edges_; }
    std::span<const std::string> vertex_names() const { return names_; }

    const std::string& vertex_name(VertexId v) const {
        if (v >= names_.size()) throw LookupError("unknown vertex id " + std::to_string(v));
        return names_[v];
    }

    std::optional<VertexId> find_vertex(std::string_view name) const {
        auto it = index_.find(std::string(name));
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    VertexId vertex(std::string_view name) const {
        if (auto v = find_vertex(name)) return *v;
        throw LookupError("unknown vertex '" + std::string(name) + "'");
    }

    std::span<const VertexId> successors(VertexId v) const {
        vertex_name(v);
        return out_[v];
    }

private:
    VertexId intern(std::string name, bool must_be_new) {
        auto [it, inserted] = index_.try_emplace(name, static_cast<VertexId>(names_.size()));
        if (inserted)
            names_.push_back(std::move(name));
        else if (must_be_new)
            throw ParseError("duplicate vertex name '" + name + "'");
        return it->second;
    }

    VertexId require(const std::string& name) const {
        auto it = index_.find(name);
        if (it == index_.end())
            throw ParseError("edge endpoint '" + name + "' not in the vertex list");
        return it->second;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<VertexId>> out_;
};

struct TimeExpandedInstance {
    TemporalGraph graph;
    VertexId source = 0;
    VertexId sink = 0;
};

// Arrival-counting instance: `copies` timed copies of every static edge
// (unit traversal, unit cost) plus one sink edge available at time n. Every
// temporal (source, sink)-path ends with the sink edge and arrives exactly
// at n+1, so all of them are earliest-arrival paths.
inline TimeExpandedInstance time_expanded_instance(const StaticDigraph& g, VertexId s, VertexId t,
                                                   int copies) {
    g.vertex_name(s);
    g.vertex_name(t);
    const int n = static_cast<int>(g.vertex_count());
    if (copies < 1 || copies > n - 1)
        throw Error("copies must lie in [1, n-1], got " + std::to_string(copies));

    std::string sink_name = "z";
    while (g.find_vertex(sink_name)) sink_name += "'";
    std::vector<std::string> names(g.vertex_names().begin(), g.vertex_names().end());
    names.push_back(sink_name);

    std::vector<EdgeSpec> specs;
    specs.reserve(g.edge_count() * static_cast<std::size_t>(copies) + 1);
    for (int i = 1; i <= copies; ++i)
        for (const auto& [u, v] : g.edges())
            specs.push_back({g.vertex_name(u), g.vertex_name(v), i, 1, Rational(1)});
    specs.push_back({g.vertex_name(t), sink_name, n, 1, Rational(1)});

    TimeExpandedInstance instance{TemporalGraph(std::move(specs), std::move(names)), s,
                                  static_cast<VertexId>(g.vertex_count())};
    return instance;
}

// Number of temporal (s,z)-paths attaining the minimum arrival time over all
// (s,z)-paths; 0 when no path exists. Brute force, guarded.
inline BigCount count_earliest_arrival_paths(const TemporalGraph& g, VertexId s, VertexId z,
                                             std::size_t max_vertices = kOracleVertexGuard) {
    BigCount count = 0;
    Time best = 0;
    bool any = false;
    for_each_temporal_path(
        g, s, z,
        [&](const std::vector<EdgeId>& ids) {
            const Time arrival = g.edge(ids.back()).arrival();
            if (!any || arrival < best) {
                best = arrival;
                count = 1;
                any = true;
            } else if (arrival == best) {
                ++count;
            }
        },
        max_vertices);
    return count;
}

namespace detail {

inline void count_static_paths_rec(const StaticDigraph& g, VertexId current, VertexId target,
                                   std::vector<char>& visited, BigCount& count) {
    if (current == target) {
        ++count;
        return;
    }
    for (VertexId next : g.successors(current)) {
        if (visited[next]) continue;
        visited[next] = 1;
        count_static_paths_rec(g, next, target, visited, count);
        visited[next] = 0;
    }
}

}  // namespace detail

// Exhaustive DFS count of simple (s,t)-paths: the independent witness the
// reduction below is checked against.
inline BigCount count_simple_paths_dfs(const StaticDigraph& g, VertexId s, VertexId t,
                                       std::size_t max_vertices = kOracleVertexGuard) {
    if (g.vertex_count() > max_vertices)
        throw SizeGuardError("digraph above the brute-force cap of " +
                             std::to_string(max_vertices));
    g.vertex_name(s);
    g.vertex_name(t);
    if (s == t) throw Error("source and target must differ");
    BigCount count = 0;
    std::vector<char> visited(g.vertex_count(), 0);
    visited[s] = 1;
    detail::count_static_paths_rec(g, s, t, visited, count);
    return count;
}

// Per-round intermediate values of the counting reduction: `arrival_counts`
// holds the earliest-arrival path counts of the expanded instances,
// `exact_counts` the derived number of paths using exactly that many edges.
struct CountingTrace {
    std::vector<BigCount> arrival_counts;  // round tau -> count in the tau-copy instance
    std::vector<BigCount> exact_counts;    // round tau -> paths of static length tau
};

// Counts simple (s,t)-paths through temporal arrival counting: round tau
// counts all paths of length <= tau in the tau-copy instance (longer paths
// cannot fit, shorter ones pick which tau of the time steps they move on),
// and the binomial recurrence unwinds the waiting-time multiplicities:
//
//   exact[tau] = arrival[tau] - sum_{i<tau} C(tau, i) * exact[i]
//
// The total over all rounds is the simple (s,t)-path count.
inline BigCount count_simple_paths_via_arrival(const StaticDigraph& g, VertexId s, VertexId t,
                                               std::size_t max_vertices = kOracleVertexGuard,
                                               CountingTrace* trace = nullptr) {
    if (g.vertex_count() > max_vertices)
        throw SizeGuardError("digraph above the brute-force cap of " +
                             std::to_string(max_vertices));
    g.vertex_name(s);
    g.vertex_name(t);
    if (s == t) throw Error("source and target must differ");

    const int n = static_cast<int>(g.vertex_count());
    std::vector<BigCount> exact;  // exact[i]: static (s,t)-paths with exactly i+1 edges
    BigCount total = 0;
    BigCount previous_arrivals = 0;
    for (int tau = 1; tau <= n - 1; ++tau) {
        const TimeExpandedInstance instance = time_expanded_instance(g, s, t, tau);

        // Count all (source, sink)-paths, checking the construction's
        // invariant: each ends with the sink edge and arrives at n+1.
        const EdgeId sink_edge = static_cast<EdgeId>(instance.graph.edge_count() - 1);
        BigCount all_paths = 0;
        for_each_temporal_path(
            instance.graph, instance.source, instance.sink,
            [&](const std::vector<EdgeId>& ids) {
                if (ids.back() != sink_edge ||
                    instance.graph.edge(ids.back()).arrival() != static_cast<Time>(n) + 1)
                    throw Error("expanded instance produced a path missing the sink edge");
                ++all_paths;
            },
            instance.graph.vertex_count());
        const BigCount arrivals = count_earliest_arrival_paths(
            instance.graph, instance.source, instance.sink, instance.graph.vertex_count());
        if (arrivals != all_paths)
            throw Error("earliest-arrival count differs from the total path count");
        if (arrivals < previous_arrivals)
            throw Error("arrival counts must be nondecreasing in the number of copies");
        previous_arrivals = arrivals;

        // Binomials C(tau, i) for the waiting-time correction.
        std::vector<BigCount> binomial(static_cast<std::size_t>(tau) + 1, 1);
        for (std::size_t row = 2; row <= static_cast<std::size_t>(tau); ++row)
            for (std::size_t i = row - 1; i >= 1; --i) binomial[i] += binomial[i - 1];

        BigCount with_waits = 0;
        for (std::size_t i = 1; i < static_cast<std::size_t>(tau); ++i)
            with_waits += binomial[i] * exact[i - 1];
        BigCount here = arrivals - with_waits;
        if (here < 0) throw Error("negative exact path count in the counting recurrence");
        total += here;
        exact.push_back(std::move(here));
        if (trace) trace->arrival_counts.push_back(arrivals);
    }
    if (trace) trace->exact_counts = exact;
    return total;
}

}  // namespace tempo
