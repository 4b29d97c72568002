#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chordless/enumerate.hpp"
#include "chordless/generators.hpp"
#include "chordless/io.hpp"
#include "chordless/labeling.hpp"
#include "chordless/oracle.hpp"
#include "chordless/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInput = 2;

struct InputOptions {
    std::string input_path;
    std::string generator_spec;
    std::string format = "edgelist";
    std::string niche_orientation;  // empty: input is already undirected
    bool drop_isolated = false;
    bool allow_large = false;
};

void add_input_flags(CLI::App* cmd, InputOptions& opts) {
    auto* input = cmd->add_option("--input", opts.input_path,
                                  "Read the graph from this file");
    auto* gen = cmd->add_option("--generator", opts.generator_spec,
                                "Generate the graph (cycle:N, wheel:N, "
                                "kbip:A,B, grid:R,C)");
    input->excludes(gen);
    gen->excludes(input);
    cmd->add_option("--format", opts.format, "Input file format")
        ->check(CLI::IsMember({"edgelist", "dimacs"}));
    cmd->add_option("--niche-overlap", opts.niche_orientation,
                    "Treat the input as directed food-web arcs with this "
                    "orientation and transform it")
        ->check(CLI::IsMember({"predator-to-prey", "prey-to-predator"}));
    cmd->add_flag("--drop-isolated", opts.drop_isolated,
                  "Remove degree-0 vertices before the run");
    cmd->add_flag("--allow-large", opts.allow_large,
                  "Lift the default 100000-vertex cap on the bit matrix");
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw chordless::ParseError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

chordless::Graph load_graph(const InputOptions& opts) {
    using namespace chordless;
    if (opts.input_path.empty() == opts.generator_spec.empty()) {
        throw CLI::ValidationError(
            "exactly one of --input and --generator is required");
    }
    Graph g = [&] {
        if (!opts.generator_spec.empty()) {
            try {
                return gen_from_spec(opts.generator_spec);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what());
            }
        }
        const std::string text = read_file(opts.input_path);
        if (!opts.niche_orientation.empty()) {
            const auto orientation =
                opts.niche_orientation == "predator-to-prey"
                    ? ArcOrientation::kPredatorToPrey
                    : ArcOrientation::kPreyToPredator;
            return niche_overlap(parse_foodweb(text), orientation);
        }
        return opts.format == "dimacs"
                   ? parse_dimacs(text, opts.allow_large)
                   : parse_edgelist(text, opts.allow_large);
    }();
    if (opts.drop_isolated) {
        g = drop_isolated(g);
    }
    return g;
}

std::ostream& open_output(const std::string& path, std::ofstream& file) {
    if (path.empty() || path == "-") {
        return std::cout;
    }
    file.open(path);
    if (!file) {
        throw chordless::ParseError("cannot open '" + path + "' for writing");
    }
    return file;
}

void write_cycle(std::ostream& out, const chordless::Graph& g,
                 std::span<const chordless::VertexId> cycle) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        out << (i ? " " : "") << g.name(cycle[i]);
    }
    out << '\n';
}

void write_stats(const std::string& path, const chordless::RunReport& report) {
    if (path.empty()) return;
    std::ofstream file;
    open_output(path, file) << chordless::to_json(report) << '\n';
}

int run_enumerate(const InputOptions& input, const std::string& algorithm,
                  bool count_only, bool include_triangles, int min_length,
                  const std::string& output_path,
                  const std::string& stats_path, std::int64_t limit,
                  bool json_to_stdout) {
    using namespace chordless;
    const Graph g = load_graph(input);
    const Labeling ell = degree_labeling(g);

    std::ofstream file;
    std::ostream& out = open_output(output_path, file);

    const bool list_triangles = include_triangles || min_length == 3;
    std::int64_t written = 0;
    CycleSink sink = [&](std::span<const VertexId> cycle) {
        if (count_only) return;
        if (cycle.size() == 3 && !list_triangles) return;
        if (limit >= 0 && written >= limit) return;
        ++written;
        write_cycle(out, g, cycle);
    };

    const EnumStats stats = algorithm == "bfs" ? enumerate_bfs(g, ell, sink)
                                               : enumerate_dfs(g, ell, sink);
    const RunReport report = make_report(g, stats, algorithm);
    if (json_to_stdout) {
        std::cout << to_json(report) << '\n';
    } else if (count_only && stats_path.empty()) {
        std::cout << "n=" << report.n << " m=" << report.m
                  << " holes=" << report.holes
                  << " triangles=" << report.triangles
                  << " triplets=" << report.num_triplets
                  << " runtime_ms=" << report.runtime_ms << '\n';
    }
    write_stats(stats_path, report);
    return kExitOk;
}

int run_oracle(const InputOptions& input, const std::string& output_path) {
    using namespace chordless;
    const Graph g = load_graph(input);
    if (g.vertex_count() > kOracleMaxVertices) {
        throw ParseError("oracle accepts at most " +
                         std::to_string(kOracleMaxVertices) + " vertices");
    }
    const Labeling ell = degree_labeling(g);
    std::ofstream file;
    std::ostream& out = open_output(output_path, file);
    for (const Cycle& cycle : oracle_enumerate(g, ell)) {
        write_cycle(out, g, cycle);
    }
    return kExitOk;
}

int run_gen(const std::string& spec, const std::string& output_path) {
    using namespace chordless;
    Graph g = [&] {
        try {
            return gen_from_spec(spec);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    std::ofstream file;
    open_output(output_path, file) << to_edgelist(g);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Enumerate every chordless cycle of an undirected graph"};
    app.require_subcommand(1);

    InputOptions enum_input;
    std::string algorithm = "dfs";
    bool count_only = false;
    bool include_triangles = false;
    int min_length = 4;
    std::string output_path;
    std::string stats_path;
    std::int64_t limit = -1;

    auto* enumerate = app.add_subcommand(
        "enumerate", "Enumerate chordless cycles, each exactly once");
    add_input_flags(enumerate, enum_input);
    enumerate->add_option("--algorithm", algorithm, "Search variant")
        ->check(CLI::IsMember({"dfs", "bfs"}));
    enumerate->add_flag("--count-only", count_only,
                        "Count cycles without listing them");
    enumerate->add_flag("--include-triangles", include_triangles,
                        "List triangles as well as holes");
    enumerate->add_option("--min-length", min_length,
                          "Smallest cycle length to list (3 or 4)")
        ->check(CLI::IsMember({3, 4}));
    enumerate->add_option("--output", output_path,
                          "Write cycles here instead of stdout");
    enumerate->add_option("--stats-json", stats_path,
                          "Write the JSON run report to this file");
    enumerate->add_option("--limit", limit, "List at most this many cycles");

    InputOptions oracle_input;
    std::string oracle_output;
    auto* oracle = app.add_subcommand(
        "oracle", "Brute-force enumeration for small graphs (n <= 24)");
    add_input_flags(oracle, oracle_input);
    oracle->add_option("--output", oracle_output,
                       "Write cycles here instead of stdout");

    std::string gen_spec;
    std::string gen_output;
    auto* gen =
        app.add_subcommand("gen", "Emit a generated graph as an edge list");
    gen->add_option("--generator", gen_spec, "Generator spec")->required();
    gen->add_option("--output", gen_output,
                    "Write the edge list here instead of stdout");

    InputOptions stats_input;
    std::string stats_algorithm = "dfs";
    auto* stats = app.add_subcommand(
        "stats", "Run the enumeration and print only the JSON report");
    add_input_flags(stats, stats_input);
    stats->add_option("--algorithm", stats_algorithm, "Search variant")
        ->check(CLI::IsMember({"dfs", "bfs"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) {
            return run_enumerate(enum_input, algorithm, count_only,
                                 include_triangles, min_length, output_path,
                                 stats_path, limit, false);
        }
        if (oracle->parsed()) {
            return run_oracle(oracle_input, oracle_output);
        }
        if (gen->parsed()) {
            return run_gen(gen_spec, gen_output);
        }
        if (stats->parsed()) {
            return run_enumerate(stats_input, stats_algorithm,
                                 /*count_only=*/true, false, 4, "", "", -1,
                                 /*json_to_stdout=*/true);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const chordless::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitUsage;
}
