#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <numeric>
#include <random>

#include "chordless/cycles.hpp"
#include "chordless/generators.hpp"
#include "chordless/labeling.hpp"
#include "test_helpers.hpp"

using namespace chordless;
using chordless::testing::make_graph;
using chordless::testing::random_graph;
using chordless::testing::random_tree;

namespace {

std::int64_t brute_force_triangles(const Graph& g) {
    std::int64_t count = 0;
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
        for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
            if (!g.adjacent(a, b)) continue;
            for (VertexId c = b + 1; c < g.vertex_count(); ++c) {
                if (g.adjacent(a, c) && g.adjacent(b, c)) ++count;
            }
        }
    }
    return count;
}

}  // namespace

TEST_CASE("C4 yields the single triplet <1,0,3>") {
    const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const SeedSet seeds = find_triplets(g, degree_labeling(g));
    REQUIRE(seeds.triplets.size() == 1);
    CHECK(seeds.triplets[0].x == 1);
    CHECK(seeds.triplets[0].u == 0);
    CHECK(seeds.triplets[0].y == 3);
    CHECK(seeds.triangles.empty());
}

TEST_CASE("trees have no triplets") {
    const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
    const SeedSet seeds = find_triplets(p4, degree_labeling(p4));
    CHECK(seeds.triplets.empty());
    CHECK(seeds.triangles.empty());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph t = random_tree(30, rng);
        CHECK(find_triplets(t, degree_labeling(t)).triplets.empty());
    }
}

TEST_CASE("K3 is a triangle, not a triplet") {
    const Graph g = make_graph(3, {{0, 1}, {1, 2}, {2, 0}});
    const Labeling ell = degree_labeling(g);
    const SeedSet seeds = find_triplets(g, ell);
    CHECK(seeds.triplets.empty());
    REQUIRE(seeds.triangles.size() == 1);
    const Cycle& t = seeds.triangles[0];
    CHECK(ell(t[1]) == 1);
    CHECK(ell(t[0]) < ell(t[2]));
}

TEST_CASE("K_{8,8} has 140 triplets") {
    const Graph g = gen_complete_bipartite(8, 8);
    const SeedSet seeds = find_triplets(g, degree_labeling(g));
    CHECK(seeds.triplets.size() == 140);
    CHECK(seeds.triangles.empty());
}

TEST_CASE("a graph with one cycle has exactly one triplet") {
    for (VertexId n = 4; n <= 20; ++n) {
        const Graph g = gen_cycle(n);
        CHECK(find_triplets(g, degree_labeling(g)).triplets.size() == 1);
    }
}

TEST_CASE("every triplet is a chordless 3-vertex path") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(14, 0.35, rng);
        const Labeling ell = degree_labeling(g);
        for (const Triplet& t : find_triplets(g, ell).triplets) {
            CHECK(g.adjacent(t.x, t.u));
            CHECK(g.adjacent(t.u, t.y));
            CHECK(!g.adjacent(t.x, t.y));
            CHECK(ell(t.u) < ell(t.x));
            CHECK(ell(t.x) < ell(t.y));
        }
    }
}

TEST_CASE("triangle list matches the brute-force count") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(14, 0.4, rng);
        const SeedSet seeds = find_triplets(g, degree_labeling(g));
        CHECK(static_cast<std::int64_t>(seeds.triangles.size()) ==
              brute_force_triangles(g));
    }
}

TEST_CASE("canonicalize C4 rotations") {
    const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Labeling ell = degree_labeling(g);
    const Cycle want{1, 0, 3, 2};

    CHECK(canonicalize_cycle(std::vector<VertexId>{2, 3, 0, 1}, g, ell) ==
          want);
    CHECK(canonicalize_cycle(want, g, ell) == want);  // idempotent
    CHECK(is_canonical(want, ell));
    CHECK(!is_canonical(std::vector<VertexId>{2, 3, 0, 1}, ell));
}

TEST_CASE("canonicalize rejects non-cycles") {
    const Graph g = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    const Labeling ell = degree_labeling(g);
    CHECK_THROWS_AS(
        canonicalize_cycle(std::vector<VertexId>{0, 1, 2}, g, ell),
        std::invalid_argument);  // (2,0) is not an edge
    CHECK_THROWS_AS(
        canonicalize_cycle(std::vector<VertexId>{0, 1, 0, 1}, g, ell),
        std::invalid_argument);
    CHECK_THROWS_AS(canonicalize_cycle(std::vector<VertexId>{0, 1}, g, ell),
                    std::invalid_argument);
}

TEST_CASE("all 2k rotations and reflections canonicalize identically") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> size(3, 12);
        const int k = size(rng);
        const Graph g = gen_cycle(k);
        // Random labeling, not just the degree labeling.
        Labeling ell;
        ell.inverse.resize(k);
        std::iota(ell.inverse.begin(), ell.inverse.end(), 0);
        std::shuffle(ell.inverse.begin(), ell.inverse.end(), rng);
        ell.label.resize(k);
        for (int i = 0; i < k; ++i) ell.label[ell.inverse[i]] = i + 1;

        std::vector<VertexId> ring(k);
        std::iota(ring.begin(), ring.end(), 0);
        const Cycle want = canonicalize_cycle(ring, g, ell);
        for (int shift = 0; shift < k; ++shift) {
            std::vector<VertexId> rotated;
            for (int i = 0; i < k; ++i) {
                rotated.push_back(ring[(shift + i) % k]);
            }
            CHECK(canonicalize_cycle(rotated, g, ell) == want);
            std::reverse(rotated.begin(), rotated.end());
            CHECK(canonicalize_cycle(rotated, g, ell) == want);
        }
    }
}
