#ifndef CHORDLESS_ENUMERATE_HPP
#define CHORDLESS_ENUMERATE_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "chordless/cycles.hpp"
#include "chordless/graph.hpp"
#include "chordless/labeling.hpp"

namespace chordless {

struct EnumStats {
    std::int64_t num_triplets = 0;
    std::int64_t visits = 0;      // neighbor examinations in the candidate loop
    std::int64_t recursions = 0;  // search frames entered (one per visit call)
    int longest_path = 0;         // longest chordless path/cycle seen, in vertices
    std::int64_t cycles_ge4 = 0;
    std::int64_t triangles = 0;
    double runtime_ms = 0.0;

    // BFS variant only: gated expansions whose subtree emitted nothing.
    std::int64_t dead_end_expansions = 0;
    // Blocking counters found nonzero after a triplet finished; always zero
    // when the blocking discipline is intact.
    std::int64_t blocked_residue_violations = 0;
};

/// Receives each chordless cycle once, in canonical form. The span is only
/// valid for the duration of the call.
using CycleSink = std::function<void(std::span<const VertexId>)>;

/// Enumerates every chordless cycle of g exactly once: triangles first, then
/// holes found by blocking-counter DFS from each initial triplet.
EnumStats enumerate_dfs(const Graph& g, const Labeling& ell,
                        const CycleSink& sink);

/// Same output set as enumerate_dfs, but every expansion is additionally
/// gated on BFS reachability in the pruned subgraph, so no search branch is
/// ever a dead end.
EnumStats enumerate_bfs(const Graph& g, const Labeling& ell,
                        const CycleSink& sink);

/// Increments blocked[u] for every neighbor u of v.
void block_neighbors(const Graph& g, VertexId v,
                     std::span<std::int32_t> blocked);

/// Decrements blocked[u] for every neighbor u of v, never below zero.
void unblock_neighbors(const Graph& g, VertexId v,
                       std::span<std::int32_t> blocked);

/// BFS predecessor tree; pi[v] < 0 means v was not reached. The root is its
/// own predecessor so "reached" is uniform across all vertices.
struct PredecessorMap {
    std::vector<VertexId> pi;
    bool reached(VertexId v) const { return pi[v] >= 0; }
};

/// BFS from path.front() in the subgraph that removes the closed
/// neighborhoods of the path's interior vertices (keeping the two endpoints)
/// and every vertex labeled below the path's second vertex. A reachable path
/// tip certifies that the path extends to at least one chordless cycle.
PredecessorMap pruned_bfs(const Graph& g, const Labeling& ell,
                          std::span<const VertexId> path);

}  // namespace chordless

#endif
