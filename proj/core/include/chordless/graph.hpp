#ifndef CHORDLESS_GRAPH_HPP
#define CHORDLESS_GRAPH_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chordless {

using VertexId = std::int32_t;

struct Edge {
    VertexId u;
    VertexId v;
};

/// Immutable undirected simple graph. A dense bit matrix answers adjacency
/// queries in constant time; sorted adjacency lists drive iteration. Vertices
/// are dense indices in [0, n); external string names are kept in a side table.
class Graph {
public:
    // The bit matrix takes n^2 bits. Construction refuses larger vertex
    // counts unless allow_large is set.
    static constexpr VertexId kDefaultMaxVertices = 100'000;

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints throw std::invalid_argument. When names is
    /// empty, vertices are named by their decimal index.
    static Graph build(VertexId n, std::span<const Edge> edges,
                       std::vector<std::string> names = {},
                       bool allow_large = false);

    VertexId vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    bool adjacent(VertexId u, VertexId v) const {
        return (matrix_[static_cast<std::size_t>(u) * stride_ +
                        (static_cast<std::uint32_t>(v) >> 6)] >>
                (v & 63)) &
               1u;
    }

    /// Neighbors of v, sorted ascending by index.
    std::span<const VertexId> neighbors(VertexId v) const { return adj_[v]; }

    VertexId degree(VertexId v) const {
        return static_cast<VertexId>(adj_[v].size());
    }

    const std::string& name(VertexId v) const { return names_[v]; }
    const std::vector<std::string>& names() const { return names_; }

private:
    Graph() = default;

    VertexId n_ = 0;
    std::int64_t m_ = 0;
    std::size_t stride_ = 0;  // 64-bit words per matrix row
    std::vector<std::uint64_t> matrix_;
    std::vector<std::vector<VertexId>> adj_;
    std::vector<std::string> names_;
};

}  // namespace chordless

#endif
