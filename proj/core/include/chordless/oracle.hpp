#ifndef CHORDLESS_ORACLE_HPP
#define CHORDLESS_ORACLE_HPP

#include <set>

#include "chordless/cycles.hpp"
#include "chordless/graph.hpp"
#include "chordless/labeling.hpp"

namespace chordless {

// Subset enumeration is 2^n; refuse anything bigger.
inline constexpr VertexId kOracleMaxVertices = 24;

/// Brute-force ground truth: a vertex subset is a chordless cycle iff its
/// induced subgraph is connected with every induced degree exactly 2. Each
/// such subset is returned once, in canonical form. Throws
/// std::invalid_argument when n exceeds kOracleMaxVertices.
std::set<Cycle> oracle_enumerate(const Graph& g, const Labeling& ell);

}  // namespace chordless

#endif
