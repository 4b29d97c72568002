#include "chordless/enumerate.hpp"

#include <cassert>
#include <chrono>
#include <queue>

namespace chordless {

void block_neighbors(const Graph& g, VertexId v,
                     std::span<std::int32_t> blocked) {
    for (VertexId u : g.neighbors(v)) {
        ++blocked[u];
    }
}

void unblock_neighbors(const Graph& g, VertexId v,
                       std::span<std::int32_t> blocked) {
    for (VertexId u : g.neighbors(v)) {
        if (blocked[u] > 0) {
            --blocked[u];
        }
    }
}

PredecessorMap pruned_bfs(const Graph& g, const Labeling& ell,
                          std::span<const VertexId> path) {
    const VertexId n = g.vertex_count();
    const std::size_t t = path.size();
    const int key = ell(path[1]);

    // Keep only vertices labeled >= key, then strike the interior vertices
    // and their neighborhoods; the two endpoints always stay.
    std::vector<std::uint8_t> allowed(n, 0);
    for (VertexId v = 0; v < n; ++v) {
        allowed[v] = ell(v) >= key;
    }
    for (std::size_t i = 1; i + 1 < t; ++i) {
        allowed[path[i]] = 0;
        for (VertexId u : g.neighbors(path[i])) {
            allowed[u] = 0;
        }
    }
    const VertexId root = path.front();
    const VertexId tip = path.back();
    allowed[root] = 1;
    allowed[tip] = 1;

    PredecessorMap map;
    map.pi.assign(n, -1);
    map.pi[root] = root;
    std::queue<VertexId> frontier;
    frontier.push(root);
    while (!frontier.empty()) {
        const VertexId v = frontier.front();
        frontier.pop();
        for (VertexId u : g.neighbors(v)) {
            if (allowed[u] && map.pi[u] < 0) {
                map.pi[u] = v;
                frontier.push(u);
            }
        }
    }
    return map;
}

namespace {

struct Frame {
    std::uint32_t cursor = 0;
    std::int64_t emitted_at_entry = 0;
    bool gated = true;
    std::vector<VertexId> pi;  // BFS variant only
};

template <bool UseBfs>
EnumStats run_enumeration(const Graph& g, const Labeling& ell,
                          const CycleSink& sink) {
    const auto t0 = std::chrono::steady_clock::now();
    EnumStats stats;

    SeedSet seeds = find_triplets(g, ell);
    stats.num_triplets = static_cast<std::int64_t>(seeds.triplets.size());
    stats.triangles = static_cast<std::int64_t>(seeds.triangles.size());
    for (const Cycle& triangle : seeds.triangles) {
        sink(triangle);
    }
    if (stats.triangles > 0) {
        stats.longest_path = 3;
    }

    const VertexId n = g.vertex_count();
    std::vector<std::int32_t> blocked(n, 0);
    std::vector<VertexId> path;
    std::vector<Frame> stack;
    path.reserve(n);
    std::int64_t emitted = 0;

    auto push_frame = [&](VertexId v) {
        // Entry of a visit on the path now ending at v.
        path.push_back(v);
        block_neighbors(g, v, blocked);
        ++stats.recursions;
        if (static_cast<int>(path.size()) > stats.longest_path) {
            stats.longest_path = static_cast<int>(path.size());
        }
        Frame frame;
        frame.emitted_at_entry = emitted;
        if constexpr (UseBfs) {
            frame.pi = pruned_bfs(g, ell, path).pi;
            frame.gated = frame.pi[v] >= 0;
        }
        stack.push_back(std::move(frame));
    };

    for (const Triplet& seed : seeds.triplets) {
        const int key = ell(seed.u);
        path.clear();
        path.push_back(seed.x);
        path.push_back(seed.u);
        block_neighbors(g, seed.u, blocked);
        push_frame(seed.y);

        while (!stack.empty()) {
            Frame& frame = stack.back();
            const VertexId tip = path.back();
            const auto nbrs = g.neighbors(tip);
            VertexId descend_to = -1;

            if (frame.gated) {
                while (frame.cursor < nbrs.size()) {
                    const VertexId v = nbrs[frame.cursor++];
                    ++stats.visits;
                    if (ell(v) <= key || blocked[v] != 1) continue;
                    if constexpr (UseBfs) {
                        if (frame.pi[v] < 0) continue;
                    }
                    // blocked[u_1] >= 2 whenever it neighbors the tip, so the
                    // path can never fold back onto its first vertex.
                    assert(v != path.front());
                    if (g.adjacent(v, path.front())) {
                        path.push_back(v);
                        assert(is_canonical(path, ell));
                        sink(path);
                        ++emitted;
                        ++stats.cycles_ge4;
                        if (static_cast<int>(path.size()) >
                            stats.longest_path) {
                            stats.longest_path =
                                static_cast<int>(path.size());
                        }
                        path.pop_back();
                    } else {
                        descend_to = v;
                        break;
                    }
                }
            }

            if (descend_to >= 0) {
                push_frame(descend_to);
                continue;
            }
            if constexpr (UseBfs) {
                if (frame.gated && emitted == frame.emitted_at_entry) {
                    ++stats.dead_end_expansions;
                }
            }
            unblock_neighbors(g, tip, blocked);
            path.pop_back();
            stack.pop_back();
        }

        unblock_neighbors(g, seed.u, blocked);
        for (VertexId v = 0; v < n; ++v) {
            if (blocked[v] != 0) {
                ++stats.blocked_residue_violations;
                blocked[v] = 0;
            }
        }
    }

    stats.runtime_ms =
        std::chrono::duration<double, std::milli>(
            std::chrono::steady_clock::now() - t0)
            .count();
    return stats;
}

}  // namespace

EnumStats enumerate_dfs(const Graph& g, const Labeling& ell,
                        const CycleSink& sink) {
    return run_enumeration<false>(g, ell, sink);
}

EnumStats enumerate_bfs(const Graph& g, const Labeling& ell,
                        const CycleSink& sink) {
    return run_enumeration<true>(g, ell, sink);
}

}  // namespace chordless
