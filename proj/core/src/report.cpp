#include "chordless/report.hpp"

#include <json.hpp>

namespace chordless {

RunReport make_report(const Graph& g, const EnumStats& stats,
                      std::string algorithm) {
    RunReport report;
    report.n = g.vertex_count();
    report.m = g.edge_count();
    report.num_triplets = stats.num_triplets;
    report.triangles = stats.triangles;
    report.holes = stats.cycles_ge4;
    report.longest_path = stats.longest_path;
    report.visits = stats.visits;
    report.recursions = stats.recursions;
    report.runtime_ms = stats.runtime_ms;
    report.algorithm = std::move(algorithm);
    return report;
}

std::string to_json(const RunReport& report) {
    const nlohmann::json j = {
        {"n", report.n},
        {"m", report.m},
        {"num_triplets", report.num_triplets},
        {"triangles", report.triangles},
        {"holes", report.holes},
        {"longest_path", report.longest_path},
        {"visits", report.visits},
        {"recursions", report.recursions},
        {"runtime_ms", report.runtime_ms},
        {"algorithm", report.algorithm},
    };
    return j.dump(2);
}

}  // namespace chordless
