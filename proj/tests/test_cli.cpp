#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"
#include "tempo/cli.hpp"
#include "tempo/generators.hpp"

using namespace tempo;

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "tempo");
    std::vector<const char*> argv;
    for (const std::string& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    CliResult result;
    result.code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
    result.out = out.str();
    result.err = err.str();
    return result;
}

std::size_t count_lines(const std::string& text) {
    std::size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    return lines;
}

// Writes a temp file and removes it when the test is done.
class TempFile {
public:
    TempFile(const std::string& name, const std::string& content)
        : path_(std::filesystem::temp_directory_path() / name) {
        std::ofstream file(path_);
        file << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    std::string str() const { return path_.string(); }

private:
    std::filesystem::path path_;
};

}  // namespace

TEST_CASE("enumerate subcommand", "[cli]") {
    const TempFile fig4("tempo_cli_fig4.txt", fixture("fig4").serialize());
    SECTION("text output, one line per path") {
        const CliResult r = run_cli({"enumerate", "--input", fig4.str(), "--source", "s",
                                     "--target", "z", "--objective", "fastest"});
        REQUIRE(r.code == 0);
        CHECK(count_lines(r.out) == 3);
        CHECK(r.out.find("cost=6 duration=3 arrival=10 path=s -[7,1,1]-> v -[9,1,5]-> z") !=
              std::string::npos);
    }
    SECTION("earliest objective on the five-edge example") {
        const TempFile fig1("tempo_cli_fig1.txt", fixture("fig1").serialize());
        const CliResult r = run_cli({"enumerate", "--input", fig1.str(), "--source", "s",
                                     "--target", "z", "--objective", "earliest"});
        REQUIRE(r.code == 0);
        CHECK(count_lines(r.out) == 1);
    }
    SECTION("jsonl lines parse and agree with text mode") {
        const CliResult text = run_cli({"enumerate", "--input", fig4.str(), "--source", "s",
                                        "--target", "z", "--objective", "fastest"});
        const CliResult jsonl = run_cli({"enumerate", "--input", fig4.str(), "--source", "s",
                                         "--target", "z", "--objective", "fastest",
                                         "--format", "jsonl"});
        REQUIRE(jsonl.code == 0);
        std::istringstream lines(jsonl.out);
        std::string line;
        std::size_t parsed = 0;
        const TemporalGraph g = fixture("fig4");
        while (std::getline(lines, line)) {
            const nlohmann::json j = nlohmann::json::parse(line);
            ++parsed;
            const std::vector<EdgeId> ids = j.at("edges").get<std::vector<EdgeId>>();
            const PathRecord record = validate_path(g, ids);
            CHECK(record.arrival == j.at("arrival").get<Time>());
            CHECK(format_rational(record.cost) == j.at("cost").get<std::string>());
        }
        CHECK(parsed == count_lines(text.out));
    }
    SECTION("missing required flag is a usage error") {
        const CliResult r = run_cli({"enumerate", "--input", fig4.str(), "--target", "z"});
        CHECK(r.code == kExitUsage);
    }
    SECTION("zero-cost refusal points at pareto") {
        const TempFile zero("tempo_cli_zero.txt",
                            "s a 1 1 1\na b 2 1 0\nb a 3 1 0\na z 4 1 1\n");
        const CliResult r = run_cli({"enumerate", "--input", zero.str(), "--source", "s",
                                     "--target", "z"});
        CHECK(r.code == kExitRefused);
        CHECK(r.err.find("pareto") != std::string::npos);
    }
    SECTION("unknown vertex is a data error") {
        const CliResult r = run_cli({"enumerate", "--input", fig4.str(), "--source", "nope",
                                     "--target", "z"});
        CHECK(r.code == kExitData);
    }
    SECTION("missing file is a data error") {
        const CliResult r = run_cli({"enumerate", "--input", "/nonexistent/g.txt", "--source",
                                     "s", "--target", "z"});
        CHECK(r.code == kExitData);
    }
}

TEST_CASE("streaming limit on a huge instance", "[cli]") {
    const TempFile big("tempo_cli_hansen20.txt", hansen_family(20).graph.serialize());
    const CliResult r = run_cli({"enumerate", "--input", big.str(), "--source", "s",
                                 "--target", "z", "--objective", "fastest", "--limit", "1",
                                 "--stats"});
    REQUIRE(r.code == 0);
    CHECK(count_lines(r.out) == 1);
    // The first path must appear after a bounded walk down the label tree,
    // not after materializing the 2^20 outputs.
    const std::size_t steps_pos = r.err.find("phase2_steps=");
    REQUIRE(steps_pos != std::string::npos);
    const long steps = std::stol(r.err.substr(steps_pos + 13));
    CHECK(steps < 500);
}

TEST_CASE("pareto subcommand", "[cli]") {
    const TempFile fig4("tempo_cli_fig4b.txt", fixture("fig4").serialize());
    SECTION("front in text form") {
        const CliResult r = run_cli({"pareto", "--input", fig4.str(), "--source", "s",
                                     "--target", "z", "--objective", "fastest"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "f=3 c=6\nf=6 c=5\n");
    }
    SECTION("front in json form") {
        const CliResult r = run_cli({"pareto", "--input", fig4.str(), "--source", "s",
                                     "--target", "z", "--format", "json"});
        REQUIRE(r.code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.out);
        REQUIRE(j.size() == 2);
        CHECK(j[0].at("f") == 3);
        CHECK(j[0].at("c") == "6");
    }
    SECTION("decision queries") {
        CHECK(run_cli({"pareto", "--input", fig4.str(), "--source", "s", "--target", "z",
                       "--decide", "5,6"})
                  .out == "yes\n");
        CHECK(run_cli({"pareto", "--input", fig4.str(), "--source", "s", "--target", "z",
                       "--decide", "4,10"})
                  .out == "no\n");
        CHECK(run_cli({"pareto", "--input", fig4.str(), "--source", "s", "--target", "z",
                       "--check-path", "4,7"})
                  .out == "yes\n");
        CHECK(run_cli({"pareto", "--input", fig4.str(), "--source", "s", "--target", "z",
                       "--check-path", "0,2,7"})
                  .out == "no\n");
        CHECK(run_cli({"pareto", "--input", fig4.str(), "--source", "s", "--target", "z",
                       "--decide", "oops"})
                  .code == kExitData);
    }
    SECTION("empty front on an unreachable pair") {
        const CliResult r = run_cli({"pareto", "--input", fig4.str(), "--source", "z",
                                     "--target", "s"});
        REQUIRE(r.code == 0);
        CHECK(r.out.empty());
    }
    SECTION("zero-cost graphs are fine here") {
        const TempFile zero("tempo_cli_zero2.txt",
                            "s a 1 1 1\na b 2 1 0\nb a 3 1 0\na z 4 1 1\n");
        const CliResult r = run_cli({"pareto", "--input", zero.str(), "--source", "s",
                                     "--target", "z", "--objective", "earliest"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "f=5 c=2\n");
    }
}

TEST_CASE("count subcommand", "[cli]") {
    const TempFile fig5("tempo_cli_fig5.txt", fig5_digraph().serialize());
    SECTION("reduction count") {
        const CliResult r = run_cli({"count", "--input", fig5.str(), "--source", "s",
                                     "--target", "t"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "4\n");
    }
    SECTION("independent witness agrees") {
        const CliResult r = run_cli({"count", "--input", fig5.str(), "--source", "s",
                                     "--target", "t", "--witness", "dfs"});
        REQUIRE(r.code == 0);
        CHECK(r.out == "4\n4\n");
    }
    SECTION("single edge") {
        const TempFile single("tempo_cli_single.txt", "s t\n");
        const CliResult r = run_cli({"count", "--input", single.str(), "--source", "s",
                                     "--target", "t"});
        CHECK(r.out == "1\n");
    }
    SECTION("TEMPO_SIZE_GUARD overrides the brute-force cap") {
        // A 13-vertex chain: above the default cap of 12, fine with 14.
        std::string text;
        for (int i = 0; i + 1 < 13; ++i)
            text += "n" + std::to_string(i) + " n" + std::to_string(i + 1) + "\n";
        const TempFile chain("tempo_cli_chain.txt", text);
        const std::vector<std::string> args{"count", "--input", chain.str(),
                                            "--source", "n0", "--target", "n12"};
        CHECK(run_cli(args).code == kExitData);
        setenv("TEMPO_SIZE_GUARD", "14", 1);
        const CliResult raised = run_cli(args);
        unsetenv("TEMPO_SIZE_GUARD");
        REQUIRE(raised.code == 0);
        CHECK(raised.out == "1\n");
    }
}

TEST_CASE("generate subcommand", "[cli]") {
    SECTION("families round-trip through parse") {
        for (const char* family : {"fig1", "fig3a", "fig3b", "fig4"}) {
            const CliResult r = run_cli({"generate", "--family", family});
            REQUIRE(r.code == 0);
            CHECK(TemporalGraph::parse(r.out).serialize() == r.out);
        }
        const CliResult fig5 = run_cli({"generate", "--family", "fig5"});
        CHECK(StaticDigraph::parse(fig5.out).serialize() == fig5.out);
    }
    SECTION("hansen and random with flags") {
        const CliResult hansen = run_cli({"generate", "--family", "hansen", "--k", "2"});
        CHECK(count_lines(hansen.out) == 6);
        const CliResult random = run_cli({"generate", "--family", "random", "--seed", "9",
                                          "--n", "4", "--m", "7"});
        CHECK(count_lines(random.out) == 7);
        const CliResult again = run_cli({"generate", "--family", "random", "--seed", "9",
                                         "--n", "4", "--m", "7"});
        CHECK(random.out == again.out);
    }
    SECTION("unknown family is a usage error") {
        CHECK(run_cli({"generate", "--family", "fig9"}).code == kExitUsage);
    }
    SECTION("--output writes the file") {
        const std::string path =
            (std::filesystem::temp_directory_path() / "tempo_cli_gen_out.txt").string();
        const CliResult r = run_cli({"generate", "--family", "fig1", "--output", path});
        REQUIRE(r.code == 0);
        std::ifstream in(path);
        std::stringstream content;
        content << in.rdbuf();
        CHECK(TemporalGraph::parse(content.str()).edge_count() == 5);
        std::filesystem::remove(path);
    }
}

TEST_CASE("verify subcommand", "[cli]") {
    SECTION("small batch passes") {
        const CliResult r = run_cli({"verify", "--seeds", "25"});
        REQUIRE(r.code == 0);
        CHECK(r.out.find("ok: 25 instances verified") != std::string::npos);
    }
    SECTION("zero seeds is a usage error") {
        CHECK(run_cli({"verify", "--seeds", "0"}).code == kExitUsage);
    }
}

TEST_CASE("top-level usage", "[cli]") {
    CHECK(run_cli({}).code == kExitUsage);
    CHECK(run_cli({"frobnicate"}).code == kExitUsage);
    CHECK(run_cli({"--help"}).code == 0);
}
