#include "chordless/io.hpp"

#include <algorithm>
#include <iostream>
#include <set>
#include <sstream>
#include <unordered_map>

namespace chordless {

namespace {

// Strips a '#' comment and splits the remainder on whitespace.
std::vector<std::string> tokenize(std::string_view line) {
    const auto hash = line.find('#');
    if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
    }
    std::vector<std::string> tokens;
    std::istringstream in{std::string(line)};
    std::string token;
    while (in >> token) {
        tokens.push_back(std::move(token));
    }
    return tokens;
}

struct NameInterner {
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> names;

    VertexId intern(const std::string& name) {
        auto [it, fresh] =
            ids.emplace(name, static_cast<VertexId>(names.size()));
        if (fresh) {
            names.push_back(name);
        }
        return it->second;
    }
};

std::vector<std::pair<VertexId, VertexId>> parse_name_pairs(
    std::string_view text, NameInterner& interner) {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    std::istringstream in{std::string(text)};
    std::string line;
    for (int line_no = 1; std::getline(in, line); ++line_no) {
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) +
                             ": expected two tokens, got " +
                             std::to_string(tokens.size()));
        }
        const VertexId first = interner.intern(tokens[0]);
        const VertexId second = interner.intern(tokens[1]);
        pairs.emplace_back(first, second);
    }
    return pairs;
}

}  // namespace

Graph parse_edgelist(std::string_view text, bool allow_large) {
    NameInterner interner;
    const auto pairs = parse_name_pairs(text, interner);
    std::vector<Edge> edges;
    edges.reserve(pairs.size());
    for (const auto& [u, v] : pairs) {
        edges.push_back({u, v});
    }
    const VertexId n = static_cast<VertexId>(interner.names.size());
    try {
        return Graph::build(n, edges, std::move(interner.names), allow_large);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

Graph parse_dimacs(std::string_view text, bool allow_large) {
    std::istringstream in{std::string(text)};
    std::string line;
    bool have_header = false;
    VertexId n = 0;
    long declared_m = 0;
    std::vector<Edge> edges;

    for (int line_no = 1; std::getline(in, line); ++line_no) {
        std::istringstream fields{line};
        std::string kind;
        if (!(fields >> kind)) continue;
        if (kind == "c") continue;
        if (kind == "p") {
            std::string format;
            if (!(fields >> format >> n >> declared_m) || format != "edge" ||
                n < 0) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": malformed problem line");
            }
            have_header = true;
            continue;
        }
        if (kind == "e") {
            if (!have_header) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": edge before 'p edge' header");
            }
            long u = 0;
            long v = 0;
            if (!(fields >> u >> v)) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": malformed edge line");
            }
            if (u < 1 || u > n || v < 1 || v > n) {
                throw ParseError("line " + std::to_string(line_no) +
                                 ": vertex " + std::to_string(u > n ? u : v) +
                                 " out of range 1.." + std::to_string(n));
            }
            edges.push_back({static_cast<VertexId>(u - 1),
                             static_cast<VertexId>(v - 1)});
            continue;
        }
        throw ParseError("line " + std::to_string(line_no) +
                         ": unknown record '" + kind + "'");
    }
    if (!have_header) {
        throw ParseError("missing 'p edge' header");
    }

    Graph g = [&] {
        try {
            return Graph::build(n, edges, {}, allow_large);
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what());
        }
    }();
    if (g.edge_count() != declared_m) {
        std::cerr << "warning: header declares " << declared_m
                  << " edges, parsed " << g.edge_count() << " after dedup\n";
    }
    return g;
}

std::string to_edgelist(const Graph& g) {
    std::ostringstream out;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u < v) {
                out << g.name(u) << ' ' << g.name(v) << '\n';
            }
        }
    }
    return out.str();
}

FoodWeb parse_foodweb(std::string_view text) {
    NameInterner interner;
    const auto pairs = parse_name_pairs(text, interner);
    FoodWeb web;
    std::set<std::pair<VertexId, VertexId>> seen;
    for (const auto& arc : pairs) {
        if (arc.first == arc.second) continue;  // cannibalism is not overlap
        if (seen.insert(arc).second) {
            web.arcs.push_back(arc);
        }
    }
    web.species = std::move(interner.names);
    return web;
}

Graph niche_overlap(const FoodWeb& web, ArcOrientation orientation) {
    const VertexId n = static_cast<VertexId>(web.species.size());
    // predators_of[w]: species that consume prey w.
    std::vector<std::vector<VertexId>> predators_of(n);
    for (const auto& [a, b] : web.arcs) {
        if (orientation == ArcOrientation::kPredatorToPrey) {
            predators_of[b].push_back(a);
        } else {
            predators_of[a].push_back(b);
        }
    }
    std::vector<Edge> edges;
    for (const auto& predators : predators_of) {
        for (std::size_t i = 0; i < predators.size(); ++i) {
            for (std::size_t j = i + 1; j < predators.size(); ++j) {
                edges.push_back({predators[i], predators[j]});
            }
        }
    }
    return Graph::build(n, edges, web.species);
}

Graph drop_isolated(const Graph& g) {
    std::vector<VertexId> remap(g.vertex_count(), -1);
    std::vector<std::string> names;
    VertexId kept = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) > 0) {
            remap[v] = kept++;
            names.push_back(g.name(v));
        }
    }
    std::vector<Edge> edges;
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v : g.neighbors(u)) {
            if (u < v) {
                edges.push_back({remap[u], remap[v]});
            }
        }
    }
    return Graph::build(kept, edges, std::move(names), true);
}

}  // namespace chordless
