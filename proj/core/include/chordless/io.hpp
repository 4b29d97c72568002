#ifndef CHORDLESS_IO_HPP
#define CHORDLESS_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chordless/graph.hpp"

namespace chordless {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Whitespace-separated "u v" lines; '#' starts a comment, blank lines are
/// skipped. Tokens are arbitrary names mapped to dense ids in
/// first-appearance order. Throws ParseError with the offending line number.
Graph parse_edgelist(std::string_view text, bool allow_large = false);

/// DIMACS: a "p edge n m" header followed by "e u v" lines with 1-based
/// vertex numbers; 'c' lines are comments. A declared edge count that
/// disagrees with the parsed count after dedup only warns on stderr.
Graph parse_dimacs(std::string_view text, bool allow_large = false);

/// One "name_u name_v" line per edge (u < v by index).
std::string to_edgelist(const Graph& g);

/// Directed predator/prey arcs over named species.
struct FoodWeb {
    std::vector<std::string> species;
    std::vector<std::pair<VertexId, VertexId>> arcs;  // deduplicated, no self-arcs
};

/// Same line format as parse_edgelist, read as directed arcs. Self-arcs
/// (cannibalism) are dropped.
FoodWeb parse_foodweb(std::string_view text);

enum class ArcOrientation {
    kPredatorToPrey,  // arc (u, v) means u eats v
    kPreyToPredator,  // arc (u, v) means v eats u
};

/// Undirected graph on the species: an edge joins two distinct species that
/// share at least one common prey.
Graph niche_overlap(const FoodWeb& web, ArcOrientation orientation);

/// Removes every degree-0 vertex, reindexing densely and keeping names.
Graph drop_isolated(const Graph& g);

}  // namespace chordless

#endif
