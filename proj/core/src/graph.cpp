#include "chordless/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace chordless {

namespace {

std::string vertex_label(VertexId v, const std::vector<std::string>& names) {
    if (v >= 0 && static_cast<std::size_t>(v) < names.size() &&
        !names[v].empty()) {
        return names[v];
    }
    return std::to_string(v);
}

}  // namespace

Graph Graph::build(VertexId n, std::span<const Edge> edges,
                   std::vector<std::string> names, bool allow_large) {
    if (n < 0) {
        throw std::invalid_argument("vertex count must be non-negative");
    }
    if (n > kDefaultMaxVertices && !allow_large) {
        throw std::invalid_argument(
            "graph has " + std::to_string(n) + " vertices; the n^2-bit " +
            "adjacency matrix is refused past " +
            std::to_string(kDefaultMaxVertices) +
            " (pass allow_large to override)");
    }
    if (!names.empty() && static_cast<VertexId>(names.size()) != n) {
        throw std::invalid_argument("name table size does not match n");
    }

    Graph g;
    g.n_ = n;
    g.stride_ = (static_cast<std::size_t>(n) + 63) / 64;
    g.matrix_.assign(static_cast<std::size_t>(n) * g.stride_, 0);
    g.adj_.resize(n);

    auto set_bit = [&g](VertexId u, VertexId v) {
        std::uint64_t& word =
            g.matrix_[static_cast<std::size_t>(u) * g.stride_ +
                      (static_cast<std::uint32_t>(v) >> 6)];
        const std::uint64_t mask = std::uint64_t{1} << (v & 63);
        const bool fresh = !(word & mask);
        word |= mask;
        return fresh;
    };

    for (const Edge& e : edges) {
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            throw std::invalid_argument(
                "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                ") out of range for n=" + std::to_string(n));
        }
        if (e.u == e.v) {
            throw std::invalid_argument("self-loop at vertex " +
                                        vertex_label(e.u, names));
        }
        if (set_bit(e.u, e.v)) {
            set_bit(e.v, e.u);
            g.adj_[e.u].push_back(e.v);
            g.adj_[e.v].push_back(e.u);
            ++g.m_;
        }
    }

    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
    }

    if (names.empty()) {
        g.names_.reserve(n);
        for (VertexId v = 0; v < n; ++v) {
            g.names_.push_back(std::to_string(v));
        }
    } else {
        g.names_ = std::move(names);
    }
    return g;
}

}  // namespace chordless
