#pragma once

#include <set>
#include <vector>

#include "tempo/enumeration.hpp"
#include "tempo/oracle.hpp"

namespace test_support {

using PathSet = std::set<std::vector<tempo::EdgeId>>;

struct Collected {
    PathSet paths;
    std::uint64_t emissions = 0;
    tempo::EnumerationSummary summary;
    bool duplicate_free() const { return emissions == paths.size(); }
};

inline Collected enumerate_set(const tempo::TemporalGraph& g, tempo::VertexId s,
                               tempo::VertexId z, tempo::Objective objective) {
    Collected result;
    result.summary = tempo::enumerate_efficient_paths(g, s, z, objective,
                                                      [&](const tempo::PathRecord& record) {
                                                          result.paths.insert(record.edge_ids);
                                                          ++result.emissions;
                                                      });
    return result;
}

inline Collected enumerate_reduction_set(const tempo::TemporalGraph& g, tempo::VertexId s,
                                         tempo::VertexId z) {
    Collected result;
    result.summary = tempo::enumerate_earliest_arrival_via_super_source(
        g, s, z, [&](const tempo::PathRecord& record) {
            result.paths.insert(record.edge_ids);
            ++result.emissions;
        });
    return result;
}

inline PathSet oracle_efficient_set(const tempo::TemporalGraph& g, tempo::VertexId s,
                                    tempo::VertexId z, tempo::Objective objective) {
    PathSet set;
    for (const tempo::PathRecord& record :
         tempo::efficient_filter(tempo::all_temporal_paths(g, s, z), objective))
        set.insert(record.edge_ids);
    return set;
}

// Representative (start, arrival, cost) triples at one vertex, as a set.
inline std::set<std::tuple<tempo::Time, tempo::Time, tempo::Rational>> rep_triples(
    const tempo::EnumerationContext& ctx, tempo::VertexId v) {
    std::set<std::tuple<tempo::Time, tempo::Time, tempo::Rational>> triples;
    for (tempo::LabelId id : ctx.reps[v].representatives()) {
        const tempo::Label& l = ctx.arena.label(id);
        triples.insert({l.start, l.arrival, l.cost});
    }
    return triples;
}

// A walk with an efficient path plus a detachable zero-cost two-edge cycle:
// s -> a (1,1,1), a -> b (2,1,0), b -> a (3,1,0), a -> z (4,1,1). The walk
// s,a,b,a,z and the path s,a,z carry the same vector (arrival 5, cost 2).
inline tempo::TemporalGraph zero_cost_cycle_fixture() {
    return tempo::TemporalGraph({{"s", "a", 1, 1, tempo::Rational(1)},
                                 {"a", "b", 2, 1, tempo::Rational(0)},
                                 {"b", "a", 3, 1, tempo::Rational(0)},
                                 {"a", "z", 4, 1, tempo::Rational(1)}});
}

}  // namespace test_support
