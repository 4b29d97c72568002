#include "chordless/generators.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chordless {

Graph gen_cycle(VertexId n) {
    if (n < 3) {
        throw std::invalid_argument("cycle needs n >= 3");
    }
    std::vector<Edge> edges;
    edges.reserve(n);
    for (VertexId i = 0; i < n; ++i) {
        edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
    }
    return Graph::build(n, edges);
}

Graph gen_wheel(VertexId n) {
    if (n < 3) {
        throw std::invalid_argument("wheel needs a rim of n >= 3");
    }
    std::vector<Edge> edges;
    edges.reserve(2 * n);
    for (VertexId i = 0; i < n; ++i) {
        edges.push_back({i, static_cast<VertexId>((i + 1) % n)});
        edges.push_back({i, n});  // hub is the last index
    }
    return Graph::build(n + 1, edges);
}

Graph gen_complete_bipartite(VertexId a, VertexId b) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument("bipartite sides need a, b >= 1");
    }
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(a) * b);
    for (VertexId i = 0; i < a; ++i) {
        for (VertexId j = 0; j < b; ++j) {
            edges.push_back({i, static_cast<VertexId>(a + j)});
        }
    }
    return Graph::build(a + b, edges);
}

Graph gen_grid(VertexId rows, VertexId cols) {
    if (rows < 1 || cols < 1) {
        throw std::invalid_argument("grid needs rows, cols >= 1");
    }
    std::vector<Edge> edges;
    for (VertexId r = 0; r < rows; ++r) {
        for (VertexId c = 0; c < cols; ++c) {
            const VertexId v = r * cols + c;
            if (c + 1 < cols) edges.push_back({v, v + 1});
            if (r + 1 < rows) edges.push_back({v, v + cols});
        }
    }
    return Graph::build(rows * cols, edges);
}

Graph gen_from_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos) {
        throw std::invalid_argument("generator spec needs the form name:args");
    }
    const std::string name = spec.substr(0, colon);
    const std::string args = spec.substr(colon + 1);

    auto parse_int = [](const std::string& s) {
        std::size_t used = 0;
        int value = 0;
        try {
            value = std::stoi(s, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad generator argument '" + s + "'");
        }
        if (used != s.size()) {
            throw std::invalid_argument("bad generator argument '" + s + "'");
        }
        return value;
    };

    const auto comma = args.find(',');
    if (name == "cycle" || name == "wheel") {
        if (comma != std::string::npos) {
            throw std::invalid_argument(name + " takes one argument");
        }
        const int n = parse_int(args);
        return name == "cycle" ? gen_cycle(n) : gen_wheel(n);
    }
    if (name == "kbip" || name == "grid") {
        if (comma == std::string::npos) {
            throw std::invalid_argument(name + " takes two arguments");
        }
        const int a = parse_int(args.substr(0, comma));
        const int b = parse_int(args.substr(comma + 1));
        return name == "kbip" ? gen_complete_bipartite(a, b) : gen_grid(a, b);
    }
    throw std::invalid_argument("unknown generator '" + name +
                                "' (expected cycle, wheel, kbip or grid)");
}

}  // namespace chordless
