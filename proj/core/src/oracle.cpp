#include "chordless/oracle.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>

namespace chordless {

std::set<Cycle> oracle_enumerate(const Graph& g, const Labeling& ell) {
    const VertexId n = g.vertex_count();
    if (n > kOracleMaxVertices) {
        throw std::invalid_argument(
            "oracle enumerates all 2^n vertex subsets and refuses n=" +
            std::to_string(n) + " > " + std::to_string(kOracleMaxVertices));
    }

    std::vector<std::uint32_t> adj(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        for (VertexId u : g.neighbors(v)) {
            adj[v] |= std::uint32_t{1} << u;
        }
    }

    std::set<Cycle> cycles;
    const std::uint32_t all = n >= 32 ? ~0u : (std::uint32_t{1} << n) - 1;
    for (std::uint32_t subset = 0; subset <= all && all != 0; ++subset) {
        if (std::popcount(subset) < 3) continue;

        // Every member must have induced degree exactly 2.
        bool degree_ok = true;
        for (std::uint32_t rest = subset; rest;) {
            const int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (std::popcount(adj[v] & subset) != 2) {
                degree_ok = false;
                break;
            }
        }
        if (!degree_ok) continue;

        // Connected + all degrees 2 means the subset is a single cycle; walk
        // it from its lowest vertex to recover the cyclic order.
        const VertexId start = std::countr_zero(subset);
        Cycle order;
        order.push_back(start);
        std::uint32_t visited = std::uint32_t{1} << start;
        VertexId at = start;
        while (true) {
            const std::uint32_t next_mask = adj[at] & subset & ~visited;
            if (next_mask == 0) break;
            at = std::countr_zero(next_mask);
            visited |= std::uint32_t{1} << at;
            order.push_back(at);
        }
        if (visited != subset) continue;  // two or more disjoint cycles

        cycles.insert(canonicalize_cycle(order, g, ell));
    }
    return cycles;
}

}  // namespace chordless
