#include "chordless/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace chordless {

SeedSet find_triplets(const Graph& g, const Labeling& ell) {
    SeedSet out;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        const auto nbrs = g.neighbors(u);
        const int lu = ell(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const VertexId a = nbrs[i];
            if (ell(a) <= lu) continue;
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                const VertexId b = nbrs[j];
                if (ell(b) <= lu) continue;
                // Orient the pair so label(x) < label(y).
                const VertexId x = ell(a) < ell(b) ? a : b;
                const VertexId y = ell(a) < ell(b) ? b : a;
                if (g.adjacent(x, y)) {
                    out.triangles.push_back({x, u, y});
                } else {
                    out.triplets.push_back({x, u, y});
                }
            }
        }
    }
    return out;
}

bool is_canonical(std::span<const VertexId> cycle, const Labeling& ell) {
    if (cycle.size() < 3) return false;
    const int second = ell(cycle[1]);
    for (VertexId v : cycle) {
        if (ell(v) < second) return false;
    }
    return ell(cycle[0]) < ell(cycle[2]);
}

Cycle canonicalize_cycle(std::span<const VertexId> cycle, const Graph& g,
                         const Labeling& ell) {
    const std::size_t k = cycle.size();
    if (k < 3) {
        throw std::invalid_argument("cycle needs at least 3 vertices");
    }
    std::vector<bool> seen(g.vertex_count(), false);
    for (std::size_t i = 0; i < k; ++i) {
        const VertexId v = cycle[i];
        if (v < 0 || v >= g.vertex_count() || seen[v]) {
            throw std::invalid_argument("sequence is not a simple cycle");
        }
        seen[v] = true;
        if (!g.adjacent(v, cycle[(i + 1) % k])) {
            throw std::invalid_argument(
                "consecutive vertices are not adjacent");
        }
    }

    std::size_t min_pos = 0;
    for (std::size_t i = 1; i < k; ++i) {
        if (ell(cycle[i]) < ell(cycle[min_pos])) min_pos = i;
    }

    // The minimum-label vertex goes second; of its two cycle neighbors the
    // smaller-labeled one leads. Exactly one direction satisfies this.
    const VertexId prev = cycle[(min_pos + k - 1) % k];
    const VertexId next = cycle[(min_pos + 1) % k];
    const bool forward = ell(prev) < ell(next);

    Cycle out;
    out.reserve(k);
    if (forward) {
        for (std::size_t i = 0; i < k; ++i) {
            out.push_back(cycle[(min_pos + k - 1 + i) % k]);
        }
    } else {
        for (std::size_t i = 0; i < k; ++i) {
            out.push_back(cycle[(min_pos + 1 + k - i) % k]);
        }
    }
    return out;
}

}  // namespace chordless
