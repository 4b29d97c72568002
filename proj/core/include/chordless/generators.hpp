#ifndef CHORDLESS_GENERATORS_HPP
#define CHORDLESS_GENERATORS_HPP

#include "chordless/graph.hpp"

namespace chordless {

/// Ring 0-1-...-(n-1)-0; n >= 3.
Graph gen_cycle(VertexId n);

/// n-vertex rim ring plus a hub adjacent to every rim vertex; the hub gets
/// the last index n. n >= 3.
Graph gen_wheel(VertexId n);

/// Complete bipartite K_{a,b}; side A occupies indices 0..a-1, side B the
/// rest. a, b >= 1.
Graph gen_complete_bipartite(VertexId a, VertexId b);

/// rows x cols grid, row-major indices, edges to the right and down
/// neighbors. rows, cols >= 1.
Graph gen_grid(VertexId rows, VertexId cols);

/// Parses a generator spec of the form "cycle:100", "wheel:100", "kbip:8,8"
/// or "grid:5,6". Throws std::invalid_argument on malformed specs.
Graph gen_from_spec(const std::string& spec);

}  // namespace chordless

#endif
