#ifndef CHORDLESS_REPORT_HPP
#define CHORDLESS_REPORT_HPP

#include <cstdint>
#include <string>

#include "chordless/enumerate.hpp"
#include "chordless/graph.hpp"

namespace chordless {

/// Machine-readable run summary; holes counts cycles of length >= 4 and
/// triangles counts length-3 cycles, so holes + triangles is the total
/// number of chordless cycles.
struct RunReport {
    std::int64_t n = 0;
    std::int64_t m = 0;
    std::int64_t num_triplets = 0;
    std::int64_t triangles = 0;
    std::int64_t holes = 0;
    std::int64_t longest_path = 0;
    std::int64_t visits = 0;
    std::int64_t recursions = 0;
    double runtime_ms = 0.0;
    std::string algorithm;  // "dfs", "bfs" or "oracle"
};

RunReport make_report(const Graph& g, const EnumStats& stats,
                      std::string algorithm);

std::string to_json(const RunReport& report);

}  // namespace chordless

#endif
