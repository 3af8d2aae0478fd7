#pragma once

#include <algorithm>
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

#include "tempo/errors.hpp"
#include "tempo/rational.hpp"

namespace tempo {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
using Time = std::int64_t;

// The two bicriteria path objectives: minimize (duration, cost) or
// (arrival time, cost).
enum class Objective { Fastest, EarliestArrival };

inline std::string_view objective_name(Objective objective) {
    return objective == Objective::Fastest ? "fastest" : "earliest-arrival";
}

struct TemporalEdge {
    EdgeId id = 0;  // position in the sorted edge stream
    VertexId src = 0;
    VertexId dst = 0;
    Time t = 0;       // availability time: the only step at which the edge can be entered
    Time lambda = 0;  // traversal time
    Rational cost;

    Time arrival() const { return t + lambda; }
};

// A concrete temporal path: an ordered edge-id sequence with its derived
// quantities. Walk records use the same shape but may revisit vertices.
struct PathRecord {
    std::vector<EdgeId> edge_ids;
    Time start = 0;
    Time arrival = 0;
    Time duration = 0;
    Rational cost;

    friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

using WalkRecord = PathRecord;

inline Time time_value(Objective objective, const PathRecord& record) {
    return objective == Objective::Fastest ? record.duration : record.arrival;
}

// Construction-time description of one edge, endpoints by name.
struct EdgeSpec {
    std::string src;
    std::string dst;
    Time t = 0;
    Time lambda = 0;
    Rational cost;
};

// Weighted temporal graph in edge-stream representation: edges sorted by
// availability time (ties keep input order) and identified by stream
// position. Immutable after construction; safe to share across readers.
class TemporalGraph {
public:
    TemporalGraph() = default;

    // `vertex_names`, when nonempty, fixes the vertex order and may include
    // vertices with no incident edge; otherwise vertices are interned in
    // first-appearance order of the sorted stream.
    explicit TemporalGraph(std::vector<EdgeSpec> specs, std::vector<std::string> vertex_names = {}) {
        std::stable_sort(specs.begin(), specs.end(),
                         [](const EdgeSpec& a, const EdgeSpec& b) { return a.t < b.t; });
        const bool fixed_vertices = !vertex_names.empty();
        for (std::string& name : vertex_names) intern(std::move(name), true);
        edges_.reserve(specs.size());
        for (EdgeSpec& spec : specs) {
            if (spec.src == spec.dst)
                throw ParseError("self-loop edge at vertex '" + spec.src + "'");
            if (spec.t < 0 || spec.lambda < 0)
                throw ParseError("negative time on edge " + spec.src + " -> " + spec.dst);
            if (spec.cost < 0)
                throw ParseError("negative cost on edge " + spec.src + " -> " + spec.dst);
            TemporalEdge edge;
            edge.id = static_cast<EdgeId>(edges_.size());
            edge.src = fixed_vertices ? require(spec.src) : intern(std::move(spec.src), false);
            edge.dst = fixed_vertices ? require(spec.dst) : intern(std::move(spec.dst), false);
            edge.t = spec.t;
            edge.lambda = spec.lambda;
            edge.cost = std::move(spec.cost);
            has_zero_cost_ = has_zero_cost_ || edge.cost == 0;
            edges_.push_back(std::move(edge));
        }
        out_.resize(names_.size());
        in_.resize(names_.size());
        for (const TemporalEdge& edge : edges_) {
            out_[edge.src].push_back(edge.id);
            in_[edge.dst].push_back(edge.id);
        }
    }

    // Text format: one edge per line, `src dst t lambda cost`, whitespace
    // separated; `#` starts a comment line; blank lines are ignored.
    static TemporalGraph parse(std::string_view text) {
        std::vector<EdgeSpec> specs;
        std::size_t line_no = 0;
        for (std::string_view line : split_lines(text)) {
            ++line_no;
            std::vector<std::string_view> tokens = split_tokens(line);
            if (tokens.empty() || tokens.front().front() == '#') continue;
            if (tokens.size() != 5)
                throw ParseError("line " + std::to_string(line_no) +
                                 ": expected 'src dst t lambda cost'");
            try {
                EdgeSpec spec;
                spec.src = std::string(tokens[0]);
                spec.dst = std::string(tokens[1]);
                spec.t = parse_time(tokens[2]);
                spec.lambda = parse_time(tokens[3]);
                spec.cost = parse_decimal(tokens[4]);
                specs.push_back(std::move(spec));
            } catch (const ParseError& e) {
                throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
            }
        }
        return TemporalGraph(std::move(specs));
    }

    // Inverse of parse: the edge stream in order, one line per edge.
    std::string serialize() const {
        std::ostringstream out;
        for (const TemporalEdge& edge : edges_) {
            out << names_[edge.src] << ' ' << names_[edge.dst] << ' ' << edge.t << ' '
                << edge.lambda << ' ' << format_rational(edge.cost) << '\n';
        }
        return out.str();
    }

    std::size_t vertex_count() const { return names_.size(); }
    std::size_t edge_count() const { return edges_.size(); }
    bool has_zero_cost() const { return has_zero_cost_; }

    std::span<const std::string> vertex_names() const { return names_; }
    std::span<const TemporalEdge> edges() const { return edges_; }

    const std::string& vertex_name(VertexId v) const {
        check_vertex(v);
        return names_[v];
    }

    const TemporalEdge& edge(EdgeId id) const {
        if (id >= edges_.size()) throw LookupError("unknown edge id " + std::to_string(id));
        return edges_[id];
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

    std::span<const EdgeId> out_edges(VertexId v) const {
        check_vertex(v);
        return out_[v];
    }

    std::span<const EdgeId> in_edges(VertexId v) const {
        check_vertex(v);
        return in_[v];
    }

    // Number of distinct availability times of edges leaving `v`.
    std::size_t distinct_departure_times(VertexId v) const {
        check_vertex(v);
        std::set<Time> times;
        for (EdgeId id : out_[v]) times.insert(edges_[id].t);
        return times.size();
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

    void check_vertex(VertexId v) const {
        if (v >= names_.size()) throw LookupError("unknown vertex id " + std::to_string(v));
    }

    static Time parse_time(std::string_view token) {
        if (token.empty()) throw ParseError("empty time field");
        Time value = 0;
        for (char c : token) {
            if (c < '0' || c > '9')
                throw ParseError("not a nonnegative integer: '" + std::string(token) + "'");
            value = value * 10 + (c - '0');
        }
        return value;
    }

    static std::vector<std::string_view> split_lines(std::string_view text) {
        std::vector<std::string_view> lines;
        std::size_t begin = 0;
        while (begin <= text.size()) {
            const std::size_t end = std::min(text.find('\n', begin), text.size());
            lines.push_back(text.substr(begin, end - begin));
            begin = end + 1;
        }
        return lines;
    }

    static std::vector<std::string_view> split_tokens(std::string_view line) {
        std::vector<std::string_view> tokens;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            std::size_t j = i;
            while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
            if (j > i) tokens.push_back(line.substr(i, j - i));
            i = j;
        }
        return tokens;
    }

    std::vector<std::string> names_;
    std::unordered_map<std::string, VertexId> index_;
    std::vector<TemporalEdge> edges_;
    std::vector<std::vector<EdgeId>> out_;
    std::vector<std::vector<EdgeId>> in_;
    bool has_zero_cost_ = false;
};

namespace detail {

// Builds a record from a chained edge sequence without re-validating it.
// An empty sequence yields the empty record (degenerate s = z backtracking).
inline PathRecord record_from_ids(const TemporalGraph& g, std::vector<EdgeId> ids) {
    PathRecord record;
    record.cost = 0;
    if (ids.empty()) return record;
    for (EdgeId id : ids) record.cost += g.edge(id).cost;
    record.start = g.edge(ids.front()).t;
    record.arrival = g.edge(ids.back()).arrival();
    record.duration = record.arrival - record.start;
    record.edge_ids = std::move(ids);
    return record;
}

inline PathRecord validate_sequence(const TemporalGraph& g, std::span<const EdgeId> ids,
                                    bool require_simple) {
    if (ids.empty()) throw Error("a temporal path has at least one edge");
    for (std::size_t i = 0; i + 1 < ids.size(); ++i) {
        const TemporalEdge& a = g.edge(ids[i]);
        const TemporalEdge& b = g.edge(ids[i + 1]);
        if (a.dst != b.src)
            throw Error("edges " + std::to_string(a.id) + " and " + std::to_string(b.id) +
                        " are not connected");
        if (a.arrival() > b.t)
            throw Error("time violation: arrive at '" + g.vertex_name(a.dst) + "' at " +
                        std::to_string(a.arrival()) + " but edge " + std::to_string(b.id) +
                        " departs at " + std::to_string(b.t));
    }
    if (require_simple) {
        std::vector<VertexId> seen{g.edge(ids.front()).src};
        for (EdgeId id : ids) seen.push_back(g.edge(id).dst);
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
            throw Error("vertex revisited: a walk, not a path");
    }
    return record_from_ids(g, std::vector<EdgeId>(ids.begin(), ids.end()));
}

}  // namespace detail

// Checks that `ids` forms a temporal path (vertex-connected, time-feasible,
// simple) and computes its record.
inline PathRecord validate_path(const TemporalGraph& g, std::span<const EdgeId> ids) {
    return detail::validate_sequence(g, ids, true);
}

// Walk variant: vertices may repeat.
inline WalkRecord validate_walk(const TemporalGraph& g, std::span<const EdgeId> ids) {
    return detail::validate_sequence(g, ids, false);
}

struct SuperSourceInstance {
    TemporalGraph graph;
    VertexId super_source = 0;
};

// Adds a fresh super source s' and prepends the zero edge (s', s, 0, 0, 0)
// to the stream. Prepending the new edge maps every (s,z)-path to an
// (s',z)-path with equal arrival and cost; since those paths start at time 0,
// their durations equal the original arrivals. Existing vertex and edge ids
// shift by: vertices keep their ids (s' is appended), edge k becomes k+1.
inline SuperSourceInstance add_super_source(const TemporalGraph& g, VertexId s) {
    std::string source_name = g.vertex_name(s) + "'";
    while (g.find_vertex(source_name)) source_name += "'";

    std::vector<std::string> names(g.vertex_names().begin(), g.vertex_names().end());
    names.push_back(source_name);

    std::vector<EdgeSpec> specs;
    specs.reserve(g.edge_count() + 1);
    specs.push_back({source_name, g.vertex_name(s), 0, 0, Rational(0)});
    for (const TemporalEdge& edge : g.edges())
        specs.push_back({g.vertex_name(edge.src), g.vertex_name(edge.dst), edge.t, edge.lambda,
                         edge.cost});

    SuperSourceInstance instance{TemporalGraph(std::move(specs), std::move(names)),
                                 static_cast<VertexId>(g.vertex_count())};
    return instance;
}

}  // namespace tempo
