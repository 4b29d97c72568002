#ifndef CHORDLESS_CYCLES_HPP
#define CHORDLESS_CYCLES_HPP

#include <span>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/labeling.hpp"

namespace chordless {

/// Cycle as a vertex sequence without the closing vertex repeated. A cycle
/// <v1..vk> is canonical when v2 carries the minimum label of the sequence
/// and label(v1) < label(v3).
using Cycle = std::vector<VertexId>;

/// Seed of a hole search: x, y in Adj(u), label(u) < label(x) < label(y),
/// (x, y) not an edge.
struct Triplet {
    VertexId x;
    VertexId u;
    VertexId y;
};

struct SeedSet {
    std::vector<Triplet> triplets;   // ordered by u index, then (x, y)
    std::vector<Cycle> triangles;    // already canonical, each exactly once
};

/// Generates all initial valid triplets of g, plus every triangle (the
/// label-ordered pairs of Adj(u) that are adjacent).
SeedSet find_triplets(const Graph& g, const Labeling& ell);

/// True iff the sequence is in canonical form under ell.
bool is_canonical(std::span<const VertexId> cycle, const Labeling& ell);

/// Rewrites a simple cycle of g into its unique canonical rotation/reflection.
/// Throws std::invalid_argument when the input is not a simple cycle of g.
Cycle canonicalize_cycle(std::span<const VertexId> cycle, const Graph& g,
                         const Labeling& ell);

}  // namespace chordless

#endif
