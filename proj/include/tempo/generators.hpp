#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "tempo/counting.hpp"
#include "tempo/temporal_graph.hpp"

namespace tempo {

// Built-in miniature instances used by the tests, docs and the `generate`
// subcommand. Names: fig1, fig3a, fig3b, fig4 (temporal), fig5 (static).
inline TemporalGraph fixture(std::string_view name) {
    auto graph = [](std::vector<EdgeSpec> specs) { return TemporalGraph(std::move(specs)); };
    if (name == "fig1")
        return graph({{"s", "a", 1, 1, 1},
                      {"s", "b", 1, 1, 2},
                      {"a", "b", 2, 1, 2},
                      {"b", "z", 2, 1, 1},
                      {"s", "z", 3, 1, 3}});
    if (name == "fig3a")
        return graph({{"s", "u", 1, 1, 1},
                      {"u", "w", 2, 2, 1},
                      {"s", "w", 2, 3, 2},
                      {"w", "z", 5, 1, 1},
                      {"s", "v", 5, 1, 1},
                      {"v", "w", 6, 1, 1}});
    if (name == "fig3b")
        return graph({{"s", "u", 5, 5, 5}, {"s", "u", 1, 6, 6}, {"u", "z", 8, 1, 1}});
    if (name == "fig4")
        return graph({{"s", "u", 3, 3, 3},
                      {"s", "w", 3, 4, 4},
                      {"u", "v", 6, 3, 1},
                      {"u", "w", 6, 2, 1},
                      {"s", "v", 7, 1, 1},
                      {"v", "w", 8, 1, 1},
                      {"w", "z", 8, 1, 1},
                      {"v", "z", 9, 1, 5}});
    throw LookupError("unknown fixture '" + std::string(name) + "'");
}

inline StaticDigraph fig5_digraph() {
    return StaticDigraph({{"s", "u"}, {"s", "w"}, {"s", "t"}, {"u", "w"}, {"u", "t"}, {"w", "t"}},
                         {"s", "u", "w", "t"});
}

struct GeneratedInstance {
    TemporalGraph graph;
    VertexId source = 0;
    VertexId target = 0;
};

// k two-route blocks in series. Block j offers a direct edge (available at
// 2j-1, traversal 2, cost 2) and a two-edge detour (available at 2j-1 and 2j,
// traversal 1, cost 1 each); both routes reach the block's end at time 2j+1
// for cost 2, so every one of the 2^k (s,z)-paths is efficient. 2k+1
// vertices, 3k edges.
inline GeneratedInstance hansen_family(int k) {
    if (k < 1) throw Error("hansen family needs k >= 1");
    std::vector<std::string> names;
    names.reserve(2 * static_cast<std::size_t>(k) + 1);
    names.emplace_back("s");
    for (int i = 2; i <= 2 * k; ++i) names.push_back("v" + std::to_string(i));
    names.emplace_back("z");

    std::vector<EdgeSpec> specs;
    specs.reserve(3 * static_cast<std::size_t>(k));
    for (int j = 1; j <= k; ++j) {
        const std::string& from = names[static_cast<std::size_t>(2 * j - 2)];
        const std::string& mid = names[static_cast<std::size_t>(2 * j - 1)];
        const std::string& to = names[static_cast<std::size_t>(2 * j)];
        const Time base = 2 * j - 1;
        specs.push_back({from, mid, base, 1, 1});
        specs.push_back({from, to, base, 2, 2});
        specs.push_back({mid, to, base + 1, 1, 1});
    }
    GeneratedInstance instance{TemporalGraph(std::move(specs), std::move(names)), 0,
                               static_cast<VertexId>(2 * k)};
    return instance;
}

// Seeded uniform instance: no self-loops, availability times in [0, t_max],
// traversal times in [lambda_min, lambda_max], integer costs from
// {1..cost_max} (or from 0 when zero costs are allowed). Reproducible: equal
// seeds give equal graphs.
inline TemporalGraph random_temporal(std::uint64_t seed, int n, int m, Time t_max,
                                     Time lambda_max, int cost_max, bool allow_zero_cost,
                                     Time lambda_min = 0) {
    if (n < 2 || m < 1) throw Error("random instance needs n >= 2 and m >= 1");
    if (t_max < 0 || lambda_min < 0 || lambda_max < lambda_min || cost_max < 1)
        throw Error("bad random instance bounds");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> vertex(0, n - 1);
    std::uniform_int_distribution<Time> time(0, t_max);
    std::uniform_int_distribution<Time> lambda(lambda_min, lambda_max);
    std::uniform_int_distribution<int> cost(allow_zero_cost ? 0 : 1, cost_max);

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));

    std::vector<EdgeSpec> specs;
    specs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const int src = vertex(rng);
        int dst = vertex(rng);
        while (dst == src) dst = vertex(rng);
        specs.push_back({names[static_cast<std::size_t>(src)],
                         names[static_cast<std::size_t>(dst)], time(rng), lambda(rng),
                         Rational(cost(rng))});
    }
    return TemporalGraph(std::move(specs), std::move(names));
}

// Seeded digraph for the counting cross-checks: every ordered pair becomes
// an edge with probability `edge_percent`/100.
inline StaticDigraph random_digraph(std::uint64_t seed, int n, int edge_percent) {
    if (n < 2) throw Error("random digraph needs n >= 2");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> roll(0, 99);
    std::vector<std::string> names;
    for (int i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
    std::vector<std::pair<std::string, std::string>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (u != v && roll(rng) < edge_percent)
                edges.emplace_back(names[static_cast<std::size_t>(u)],
                                   names[static_cast<std::size_t>(v)]);
    return StaticDigraph(std::move(edges), std::move(names));
}

// Canonical differential-test instance for one seed: n <= 9, m <= 16,
// strictly positive traversal times and integer costs, seed-dependent
// endpoints (occasionally equal, covering the degenerate query). Shared by
// the test suites and `tempo verify`. Positive traversal times keep the
// single-pass label-count bounds assertable; `zero_lambda_instance` covers
// the zero-traversal case separately.
inline GeneratedInstance suite_instance(std::uint64_t seed, bool allow_zero_cost = false) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    const int n = 2 + static_cast<int>(rng() % 8);   // 2..9
    const int m = 1 + static_cast<int>(rng() % 16);  // 1..16
    TemporalGraph graph = random_temporal(rng(), n, m, 8, 3, 4, allow_zero_cost, 1);
    GeneratedInstance instance{std::move(graph), static_cast<VertexId>(rng() % n),
                               static_cast<VertexId>(rng() % n)};
    return instance;
}

// Like suite_instance but with traversal times from {0..3}: zero-traversal
// edges chain (and may cycle) inside one availability step, the stress case
// for the stream sweep's intra-step ordering. Enumeration output must still
// match the oracle here; the single-pass label-count bounds need not hold.
inline GeneratedInstance zero_lambda_instance(std::uint64_t seed) {
    std::mt19937_64 rng(seed ^ 0xc2b2ae3d27d4eb4full);
    const int n = 2 + static_cast<int>(rng() % 8);
    const int m = 1 + static_cast<int>(rng() % 16);
    TemporalGraph graph = random_temporal(rng(), n, m, 8, 3, 4, false, 0);
    GeneratedInstance instance{std::move(graph), static_cast<VertexId>(rng() % n),
                               static_cast<VertexId>(rng() % n)};
    return instance;
}

}  // namespace tempo
