#include <doctest.h>

#include <stdexcept>

#include "chordless/enumerate.hpp"
#include "chordless/generators.hpp"
#include "chordless/io.hpp"
#include "chordless/labeling.hpp"
#include "chordless/report.hpp"
#include "test_helpers.hpp"

#include <json.hpp>

using namespace chordless;

TEST_CASE("edgelist parsing") {
    const Graph g = parse_edgelist("a b\nb c\nc a\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.name(0) == "a");  // first-appearance order
    CHECK(g.name(2) == "c");

    const Graph single = parse_edgelist("# comment\na b");
    CHECK(single.edge_count() == 1);

    CHECK_THROWS_WITH_AS(parse_edgelist("a"),
                         "line 1: expected two tokens, got 1", ParseError);
    CHECK_THROWS_AS(parse_edgelist("a b\nx x\n"), ParseError);  // self-loop
}

TEST_CASE("dimacs parsing") {
    const Graph g = parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 3 1\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);

    CHECK_THROWS_AS(parse_dimacs("e 1 2\np edge 2 1\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("p edge 2 1\ne 1 3\n"), ParseError);
    CHECK_THROWS_AS(parse_dimacs("c only comments\n"), ParseError);
    // Wrong declared m only warns.
    CHECK(parse_dimacs("p edge 3 9\ne 1 2\n").edge_count() == 1);
}

TEST_CASE("generator sizes match") {
    CHECK(gen_cycle(100).vertex_count() == 100);
    CHECK(gen_cycle(100).edge_count() == 100);
    CHECK(gen_wheel(100).vertex_count() == 101);
    CHECK(gen_wheel(100).edge_count() == 200);
    CHECK(gen_complete_bipartite(8, 8).vertex_count() == 16);
    CHECK(gen_complete_bipartite(8, 8).edge_count() == 64);
    CHECK(gen_grid(5, 6).vertex_count() == 30);
    CHECK(gen_grid(5, 6).edge_count() == 49);
    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(gen_grid(0, 5), std::invalid_argument);
}

TEST_CASE("generator spec strings") {
    CHECK(gen_from_spec("cycle:5").vertex_count() == 5);
    CHECK(gen_from_spec("grid:5,6").edge_count() == 49);
    CHECK(gen_from_spec("kbip:2,3").edge_count() == 6);
    CHECK_THROWS_AS(gen_from_spec("cycle"), std::invalid_argument);
    CHECK_THROWS_AS(gen_from_spec("torus:3,3"), std::invalid_argument);
    CHECK_THROWS_AS(gen_from_spec("grid:5"), std::invalid_argument);
    CHECK_THROWS_AS(gen_from_spec("cycle:5x"), std::invalid_argument);
}

TEST_CASE("edgelist round-trips through the serializer") {
    const Graph graphs[] = {gen_cycle(7), gen_wheel(6), gen_grid(3, 4)};
    for (const Graph& g : graphs) {
        const Graph back = parse_edgelist(to_edgelist(g));
        REQUIRE(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
        for (VertexId u = 0; u < back.vertex_count(); ++u) {
            // Names carry the original indices, so compare through them.
            for (VertexId v = 0; v < back.vertex_count(); ++v) {
                CHECK(back.adjacent(u, v) ==
                      g.adjacent(std::stoi(back.name(u)),
                                 std::stoi(back.name(v))));
            }
        }
    }
}

TEST_CASE("niche overlap joins predators that share prey") {
    const FoodWeb shared = parse_foodweb("p1 w\np2 w\n");
    const Graph g1 = niche_overlap(shared, ArcOrientation::kPredatorToPrey);
    CHECK(g1.edge_count() == 1);
    CHECK(g1.adjacent(0, 2));  // p1 and p2; w sits between them

    const FoodWeb separate = parse_foodweb("p1 w1\np2 w2\n");
    CHECK(niche_overlap(separate, ArcOrientation::kPredatorToPrey)
              .edge_count() == 0);

    const FoodWeb chain = parse_foodweb("a b\nb c\n");
    CHECK(niche_overlap(chain, ArcOrientation::kPredatorToPrey)
              .edge_count() == 0);

    // Reversed orientation: same file read as prey -> predator.
    const Graph g2 =
        niche_overlap(parse_foodweb("w p1\nw p2\n"),
                      ArcOrientation::kPreyToPredator);
    CHECK(g2.edge_count() == 1);
    CHECK(g2.adjacent(1, 2));

    // Self-arcs and duplicates are normalized away.
    const FoodWeb messy = parse_foodweb("a a\np1 w\np1 w\n");
    CHECK(messy.arcs.size() == 1);
}

TEST_CASE("drop_isolated removes degree-0 vertices and keeps names") {
    const Graph g = parse_edgelist("a b\nb c\nc a\n");
    // Add an isolated vertex by hand.
    std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}};
    const Graph with_iso = Graph::build(
        4, edges, {"a", "b", "c", "lonely"});
    const Graph cleaned = drop_isolated(with_iso);
    CHECK(cleaned.vertex_count() == 3);
    CHECK(cleaned.edge_count() == 3);
    CHECK(cleaned.name(2) == "c");

    const Graph empty = drop_isolated(Graph::build(5, {}));
    CHECK(empty.vertex_count() == 0);

    const Graph same = drop_isolated(g);
    CHECK(same.vertex_count() == 3);
    CHECK(same.edge_count() == 3);
}

TEST_CASE("run report serializes with the exact field names") {
    const Graph g = gen_cycle(4);
    const Labeling ell = degree_labeling(g);
    const EnumStats stats = enumerate_dfs(g, ell, [](auto) {});
    const RunReport report = make_report(g, stats, "dfs");
    CHECK(report.holes + report.triangles == 1);

    const auto j = nlohmann::json::parse(to_json(report));
    for (const char* field :
         {"n", "m", "num_triplets", "triangles", "holes", "longest_path",
          "visits", "recursions", "runtime_ms", "algorithm"}) {
        CHECK(j.contains(field));
    }
    CHECK(j["n"] == 4);
    CHECK(j["holes"] == 1);
    CHECK(j["algorithm"] == "dfs");
}
