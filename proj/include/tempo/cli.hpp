#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tempo/counting.hpp"
#include "tempo/enumeration.hpp"
#include "tempo/generators.hpp"
#include "tempo/oracle.hpp"
#include "tempo/pareto.hpp"

namespace tempo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;  // verification found a counterexample
inline constexpr int kExitRefused = 2;   // domain refusal (zero-cost edges)
inline constexpr int kExitUsage = 64;
inline constexpr int kExitData = 65;

namespace cli_detail {

inline std::string load_text(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline Time parse_nonneg_int(std::string_view token) {
    if (token.empty()) throw ParseError("empty integer");
    Time value = 0;
    for (char c : token) {
        if (c < '0' || c > '9')
            throw ParseError("not a nonnegative integer: '" + std::string(token) + "'");
        value = value * 10 + (c - '0');
    }
    return value;
}

inline std::vector<std::string> split_on_commas(std::string_view text) {
    std::vector<std::string> parts;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        const std::size_t end = std::min(text.find(',', begin), text.size());
        parts.emplace_back(text.substr(begin, end - begin));
        begin = end + 1;
    }
    return parts;
}

inline Objective parse_objective(const std::string& name) {
    return name == "fastest" ? Objective::Fastest : Objective::EarliestArrival;
}

inline std::size_t size_guard_from_env() {
    const char* raw = std::getenv("TEMPO_SIZE_GUARD");
    if (raw == nullptr || *raw == '\0') return kOracleVertexGuard;
    const Time value = parse_nonneg_int(raw);
    if (value < 1) throw ParseError("TEMPO_SIZE_GUARD must be a positive integer");
    return static_cast<std::size_t>(value);
}

inline std::string render_path_text(const TemporalGraph& g, const PathRecord& record) {
    std::ostringstream out;
    out << g.vertex_name(g.edge(record.edge_ids.front()).src);
    for (EdgeId id : record.edge_ids) {
        const TemporalEdge& e = g.edge(id);
        out << " -[" << e.t << ',' << e.lambda << ',' << format_rational(e.cost) << "]-> "
            << g.vertex_name(e.dst);
    }
    return out.str();
}

struct EnumerateOptions {
    std::string input;
    std::string source;
    std::string target;
    std::string objective = "fastest";
    std::string format = "text";
    std::uint64_t limit = 0;  // 0: unlimited
    bool stats = false;
};

inline int run_enumerate(const EnumerateOptions& opt, std::ostream& out, std::ostream& err) {
    const TemporalGraph g = TemporalGraph::parse(load_text(opt.input));
    const VertexId s = g.vertex(opt.source);
    const VertexId z = g.vertex(opt.target);
    const Objective objective = parse_objective(opt.objective);
    const bool jsonl = opt.format == "jsonl";
    std::uint64_t emitted = 0;
    auto consumer = [&](const PathRecord& record) {
        if (jsonl) {
            nlohmann::json line;
            line["cost"] = format_rational(record.cost);
            line["start"] = record.start;
            line["duration"] = record.duration;
            line["arrival"] = record.arrival;
            line["edges"] = record.edge_ids;
            out << line.dump() << '\n';
        } else {
            out << "cost=" << format_rational(record.cost) << " duration=" << record.duration
                << " arrival=" << record.arrival << " path=" << render_path_text(g, record)
                << '\n';
        }
        out.flush();  // paths stream out as they are found
        ++emitted;
        return opt.limit == 0 || emitted < opt.limit;
    };
    const EnumerationSummary summary = enumerate_efficient_paths(g, s, z, objective, consumer);
    if (opt.stats)
        err << "stats: labels_created=" << summary.stats.labels_created
            << " phase2_steps=" << summary.stats.phase2_steps
            << " max_delay_steps=" << summary.stats.max_delay_steps << " paths=" << summary.paths
            << '\n';
    return kExitOk;
}

struct ParetoOptions {
    std::string input;
    std::string source;
    std::string target;
    std::string objective = "fastest";
    std::string format = "text";
    std::string decide;      // "cost,time"
    std::string check_path;  // "e0,e1,..."
};

inline int run_pareto(const ParetoOptions& opt, std::ostream& out, std::ostream&) {
    const TemporalGraph g = TemporalGraph::parse(load_text(opt.input));
    const VertexId s = g.vertex(opt.source);
    const VertexId z = g.vertex(opt.target);
    const Objective objective = parse_objective(opt.objective);

    bool answered = false;
    if (!opt.decide.empty()) {
        const std::vector<std::string> parts = split_on_commas(opt.decide);
        if (parts.size() != 2) throw ParseError("--decide expects 'cost,time'");
        const Rational cost_bound = parse_decimal(parts[0]);
        const Time time_bound = parse_nonneg_int(parts[1]);
        out << (exists_within(g, s, z, objective, cost_bound, time_bound) ? "yes" : "no") << '\n';
        answered = true;
    }
    if (!opt.check_path.empty()) {
        std::vector<EdgeId> ids;
        for (const std::string& part : split_on_commas(opt.check_path))
            ids.push_back(static_cast<EdgeId>(parse_nonneg_int(part)));
        out << (is_efficient(g, s, z, objective, ids) ? "yes" : "no") << '\n';
        answered = true;
    }
    if (answered) return kExitOk;

    const ParetoFront front = pareto_front(g, s, z, objective);
    if (opt.format == "json") {
        nlohmann::json points = nlohmann::json::array();
        for (const ParetoPoint& p : front.points)
            points.push_back({{"f", p.time_value}, {"c", format_rational(p.cost)}});
        out << points.dump() << '\n';
    } else {
        out << serialize_front(front);
    }
    return kExitOk;
}

struct CountOptions {
    std::string input;
    std::string source;
    std::string target;
    std::string witness;
};

inline int run_count(const CountOptions& opt, std::ostream& out, std::ostream&) {
    const StaticDigraph g = StaticDigraph::parse(load_text(opt.input));
    const VertexId s = g.vertex(opt.source);
    const VertexId t = g.vertex(opt.target);
    const std::size_t guard = size_guard_from_env();
    out << count_simple_paths_via_arrival(g, s, t, guard).str() << '\n';
    if (opt.witness == "dfs") out << count_simple_paths_dfs(g, s, t, guard).str() << '\n';
    return kExitOk;
}

struct GenerateOptions {
    std::string family;
    std::string output;
    int k = 3;
    std::uint64_t seed = 1;
    int n = 6;
    int m = 12;
    Time t_max = 8;
    Time lambda_max = 3;
    int cost_max = 4;
    bool allow_zero_cost = false;
};

inline int run_generate(const GenerateOptions& opt, std::ostream& out, std::ostream&) {
    std::string text;
    if (opt.family == "fig5")
        text = fig5_digraph().serialize();
    else if (opt.family == "hansen")
        text = hansen_family(opt.k).graph.serialize();
    else if (opt.family == "random")
        text = random_temporal(opt.seed, opt.n, opt.m, opt.t_max, opt.lambda_max, opt.cost_max,
                               opt.allow_zero_cost)
                   .serialize();
    else
        text = fixture(opt.family).serialize();
    if (opt.output.empty()) {
        out << text;
    } else {
        std::ofstream file(opt.output, std::ios::binary);
        if (!file) throw Error("cannot write '" + opt.output + "'");
        file << text;
    }
    return kExitOk;
}

struct VerifyOptions {
    std::uint64_t seeds = 100;
};

// Differential sweep: on every seeded instance the label-setting results
// must match the brute-force ground truth exactly.
inline int run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
    const std::size_t guard = size_guard_from_env();
    for (std::uint64_t seed = 1; seed <= opt.seeds; ++seed) {
        const GeneratedInstance instance = suite_instance(seed);
        const TemporalGraph& g = instance.graph;
        const VertexId s = instance.source;
        const VertexId z = instance.target;

        auto fail = [&](const std::string& what) {
            err << "mismatch at seed " << seed << " (source "
                << g.vertex_name(s) << ", target " << g.vertex_name(z) << "): " << what << '\n'
                << g.serialize();
            return kExitMismatch;
        };

        const std::vector<PathRecord> paths = all_temporal_paths(g, s, z, guard);
        for (Objective objective : {Objective::Fastest, Objective::EarliestArrival}) {
            std::set<std::vector<EdgeId>> expected;
            for (const PathRecord& record : efficient_filter(paths, objective))
                expected.insert(record.edge_ids);

            std::set<std::vector<EdgeId>> actual;
            std::uint64_t emitted = 0;
            const EnumerationSummary summary = enumerate_efficient_paths(
                g, s, z, objective, [&](const PathRecord& record) {
                    actual.insert(record.edge_ids);
                    ++emitted;
                    return true;
                });
            if (actual != expected)
                return fail(std::string(objective_name(objective)) +
                            " enumeration differs from the brute-force efficient set");
            if (emitted != actual.size())
                return fail(std::string(objective_name(objective)) + " emitted duplicates");

            const std::size_t bound =
                objective == Objective::Fastest
                    ? g.distinct_departure_times(s) * g.edge_count() + 1
                    : g.edge_count() + 1;
            if (summary.stats.labels_created > bound)
                return fail(std::string(objective_name(objective)) + " label bound exceeded");

            std::set<std::pair<Time, Rational>> expected_front;
            for (const PathRecord& record : efficient_filter(paths, objective))
                expected_front.insert({time_value(objective, record), record.cost});
            std::set<std::pair<Time, Rational>> actual_front;
            for (const ParetoPoint& p : pareto_front(g, s, z, objective).points)
                actual_front.insert({p.time_value, p.cost});
            if (actual_front != expected_front)
                return fail(std::string(objective_name(objective)) +
                            " front differs from the brute-force front");
        }

        std::set<std::vector<EdgeId>> direct;
        enumerate_efficient_paths(g, s, z, Objective::EarliestArrival,
                                  [&](const PathRecord& r) { direct.insert(r.edge_ids); });
        std::set<std::vector<EdgeId>> reduced;
        enumerate_earliest_arrival_via_super_source(
            g, s, z, [&](const PathRecord& r) { reduced.insert(r.edge_ids); });
        if (direct != reduced) return fail("super-source reduction differs from the direct run");
    }

    // Zero-traversal stress: edges may chain inside one availability step.
    // Output must still match the oracle; the label bounds are not asserted
    // here (re-processing cycle blocks can exceed the single-pass count).
    for (std::uint64_t seed = 1; seed <= opt.seeds / 2; ++seed) {
        const GeneratedInstance instance = zero_lambda_instance(seed);
        const TemporalGraph& g = instance.graph;
        const std::vector<PathRecord> paths =
            all_temporal_paths(g, instance.source, instance.target, guard);
        for (Objective objective : {Objective::Fastest, Objective::EarliestArrival}) {
            std::set<std::vector<EdgeId>> expected;
            for (const PathRecord& record : efficient_filter(paths, objective))
                expected.insert(record.edge_ids);
            std::set<std::vector<EdgeId>> actual;
            std::uint64_t emitted = 0;
            enumerate_efficient_paths(g, instance.source, instance.target, objective,
                                      [&](const PathRecord& record) {
                                          actual.insert(record.edge_ids);
                                          ++emitted;
                                      });
            if (actual != expected || emitted != actual.size()) {
                err << "mismatch at zero-traversal seed " << seed << " (source "
                    << g.vertex_name(instance.source) << ", target "
                    << g.vertex_name(instance.target) << "): "
                    << objective_name(objective) << " enumeration differs\n"
                    << g.serialize();
                return kExitMismatch;
            }
        }
    }
    out << "ok: " << opt.seeds << " instances verified (+" << opt.seeds / 2
        << " zero-traversal)\n";
    return kExitOk;
}

}  // namespace cli_detail

inline int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Efficient-path enumeration and Pareto queries on weighted temporal graphs"};
    app.require_subcommand(1);

    cli_detail::EnumerateOptions enumerate_opt;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Stream all efficient (source,target)-paths, one per line");
    enumerate->add_option("--input", enumerate_opt.input, "temporal graph file")->required();
    enumerate->add_option("--source", enumerate_opt.source, "source vertex")->required();
    enumerate->add_option("--target", enumerate_opt.target, "target vertex")->required();
    enumerate->add_option("--objective", enumerate_opt.objective, "fastest | earliest")
        ->check(CLI::IsMember({"fastest", "earliest"}));
    enumerate->add_option("--format", enumerate_opt.format, "text | jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    enumerate->add_option("--limit", enumerate_opt.limit, "stop after N paths");
    enumerate->add_flag("--stats", enumerate_opt.stats, "print run statistics to stderr");

    cli_detail::ParetoOptions pareto_opt;
    CLI::App* pareto = app.add_subcommand(
        "pareto", "Print the nondominated (time,cost) front or answer decision queries");
    pareto->add_option("--input", pareto_opt.input, "temporal graph file")->required();
    pareto->add_option("--source", pareto_opt.source, "source vertex")->required();
    pareto->add_option("--target", pareto_opt.target, "target vertex")->required();
    pareto->add_option("--objective", pareto_opt.objective, "fastest | earliest")
        ->check(CLI::IsMember({"fastest", "earliest"}));
    pareto->add_option("--format", pareto_opt.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    pareto->add_option("--decide", pareto_opt.decide,
                       "'cost,time': is there a path within both bounds?");
    pareto->add_option("--check-path", pareto_opt.check_path,
                       "comma-separated edge ids: is this path efficient?");

    cli_detail::CountOptions count_opt;
    CLI::App* count = app.add_subcommand(
        "count", "Count simple (source,target)-paths of a static digraph");
    count->add_option("--input", count_opt.input, "digraph file, one 'src dst' per line")
        ->required();
    count->add_option("--source", count_opt.source, "source vertex")->required();
    count->add_option("--target", count_opt.target, "target vertex")->required();
    count->add_option("--witness", count_opt.witness, "'dfs': also print the direct DFS count")
        ->check(CLI::IsMember({"dfs"}));

    cli_detail::GenerateOptions generate_opt;
    CLI::App* generate = app.add_subcommand("generate", "Emit a built-in or random instance");
    generate
        ->add_option("--family", generate_opt.family,
                     "fig1 | fig3a | fig3b | fig4 | fig5 | hansen | random")
        ->required()
        ->check(CLI::IsMember({"fig1", "fig3a", "fig3b", "fig4", "fig5", "hansen", "random"}));
    generate->add_option("--k", generate_opt.k, "hansen: number of blocks");
    generate->add_option("--seed", generate_opt.seed, "random: seed");
    generate->add_option("--n", generate_opt.n, "random: vertex count");
    generate->add_option("--m", generate_opt.m, "random: edge count");
    generate->add_option("--t-max", generate_opt.t_max, "random: max availability time");
    generate->add_option("--lambda-max", generate_opt.lambda_max, "random: max traversal time");
    generate->add_option("--cost-max", generate_opt.cost_max, "random: max edge cost");
    generate->add_flag("--allow-zero-cost", generate_opt.allow_zero_cost,
                       "random: draw costs from 0 instead of 1");
    generate->add_option("--output", generate_opt.output, "write to a file instead of stdout");

    cli_detail::VerifyOptions verify_opt;
    CLI::App* verify = app.add_subcommand(
        "verify", "Cross-check the algorithms against brute force on seeded instances");
    verify->add_option("--seeds", verify_opt.seeds, "number of seeded instances")
        ->check(CLI::Range(std::uint64_t{1}, std::uint64_t{100000000}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*enumerate) return cli_detail::run_enumerate(enumerate_opt, out, err);
        if (*pareto) return cli_detail::run_pareto(pareto_opt, out, err);
        if (*count) return cli_detail::run_count(count_opt, out, err);
        if (*generate) return cli_detail::run_generate(generate_opt, out, err);
        if (*verify) return cli_detail::run_verify(verify_opt, out, err);
    } catch (const ZeroCostError& e) {
        err << "refused: " << e.what() << " (see `tempo pareto`)" << '\n';
        return kExitRefused;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitUsage;
}

}  // namespace tempo
