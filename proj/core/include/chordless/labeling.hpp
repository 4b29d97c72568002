#ifndef CHORDLESS_LABELING_HPP
#define CHORDLESS_LABELING_HPP

#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

/// A bijection V -> {1..n} together with its inverse.
struct Labeling {
    std::vector<int> label;         // vertex index -> label in [1, n]
    std::vector<VertexId> inverse;  // label - 1 -> vertex index

    int operator()(VertexId v) const { return label[v]; }
    VertexId vertex_with_label(int lbl) const { return inverse[lbl - 1]; }
    VertexId size() const { return static_cast<VertexId>(label.size()); }
};

/// Labels vertices by iterative minimum-degree peeling: label i goes to the
/// minimum-residual-degree vertex of the graph with the first i-1 labeled
/// vertices removed. Ties break toward the smallest vertex index.
Labeling degree_labeling(const Graph& g);

}  // namespace chordless

#endif
