#include "chordless/labeling.hpp"

#include <vector>

namespace chordless {

Labeling degree_labeling(const Graph& g) {
    const VertexId n = g.vertex_count();
    Labeling ell;
    ell.label.assign(n, 0);
    ell.inverse.assign(n, -1);

    std::vector<VertexId> residual(n);
    std::vector<bool> removed(n, false);
    for (VertexId v = 0; v < n; ++v) {
        residual[v] = g.degree(v);
    }

    for (int i = 1; i <= n; ++i) {
        // First still-present vertex of minimum residual degree; the strict
        // less keeps ties on the smallest index.
        VertexId chosen = -1;
        VertexId min_degree = n;
        for (VertexId x = 0; x < n; ++x) {
            if (!removed[x] && residual[x] < min_degree) {
                chosen = x;
                min_degree = residual[x];
            }
        }
        ell.label[chosen] = i;
        ell.inverse[i - 1] = chosen;
        removed[chosen] = true;
        for (VertexId u : g.neighbors(chosen)) {
            if (!removed[u]) {
                --residual[u];
            }
        }
    }
    return ell;
}

}  // namespace chordless
