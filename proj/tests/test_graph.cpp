#include <doctest.h>

#include "awgraph/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace awgraph;

namespace {

ErrorKind kind_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no error raised");
    return ErrorKind::Io;
}

} // namespace

TEST_CASE("edge list parsing")
{
    const auto g = load_graph("4 4\n0 1\n1 2\r\n2 3\n3 0\n", GraphFormat::EdgeList, "square");
    CHECK(g.n == 4);
    CHECK(g.adjacency.sum() == 8);
    CHECK(g.degree(2) == 2);

    CHECK(kind_of([] { load_graph("", GraphFormat::EdgeList); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_graph("3 2\n0 1\n", GraphFormat::EdgeList); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_graph("3 2\n0 1\n1 1\n", GraphFormat::EdgeList); }) == ErrorKind::Loop);
    CHECK(kind_of([] { load_graph("3 2\n0 1\n1 0\n", GraphFormat::EdgeList); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_graph("3 2\n0 1\n1 5\n", GraphFormat::EdgeList); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_graph("4 2\n0 1\n2 3\n", GraphFormat::EdgeList); }) == ErrorKind::Disconnected);
}

TEST_CASE("dense parsing")
{
    const auto g = load_graph_file(std::string(AWGRAPH_TEST_DATA) + "/cycle6.dense", GraphFormat::Dense);
    CHECK(oracle::isomorphic(oracle::to_grid(g.adjacency), oracle::to_grid(generate_family(Family::Cycle, 6).adjacency)));
    CHECK(kind_of([] { load_graph("0 1\n0 0\n", GraphFormat::Dense); }) == ErrorKind::Asymmetric);
    CHECK(kind_of([] { load_graph("0 2\n2 0\n", GraphFormat::Dense); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_graph("0 1 0\n1 0\n", GraphFormat::Dense); }) == ErrorKind::Parse);
    CHECK(kind_of([] { load_graph_file("/nonexistent/graph", GraphFormat::Dense); }) == ErrorKind::Io);
    CHECK(kind_of([] { parse_graph_format("csv"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("family generators match known isomorphisms")
{
    auto grid = [](Family f, int s) { return oracle::to_grid(generate_family(f, s).adjacency); };
    // K_{3,3} minus a perfect matching is the hexagon, K_{4,4} minus one is the cube.
    CHECK(oracle::isomorphic(grid(Family::Crown, 3), grid(Family::Cycle, 6)));
    CHECK(oracle::isomorphic(grid(Family::Crown, 4), grid(Family::Hypercube, 3)));
    CHECK_FALSE(oracle::isomorphic(grid(Family::Crown, 5), grid(Family::Cycle, 10)));

    CHECK(generate_family(Family::Hadamard, 8).n == 32);
    CHECK(generate_family(Family::Hadamard, 8).degree(0) == 8);
    CHECK(generate_family(Family::Hypercube, 5).n == 32);

    CHECK(kind_of([] { generate_family(Family::Cycle, 7); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { generate_family(Family::Hadamard, 6); }) == ErrorKind::InvalidArgument);
    CHECK(kind_of([] { parse_family("petersen"); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("distances agree with Floyd-Warshall")
{
    for (const auto& g : {generate_family(Family::Hadamard, 8), generate_family(Family::Crown, 6), fixture("heawood.edges")}) {
        const auto ref = oracle::floyd_distances(oracle::to_grid(g.adjacency));
        const auto d = bfs_distances(g);
        for (int x = 0; x < g.n; ++x)
            for (int y = 0; y < g.n; ++y)
                REQUIRE(d(x, y) == ref[x][y]);
    }
}

TEST_CASE("intersection numbers agree with pair counting")
{
    for (const auto& g : {generate_family(Family::Hadamard, 8), fixture("icosahedron.edges"), fixture("cycle9.edges")}) {
        const auto drg = compute_distance_data(g);
        const auto dist = oracle::floyd_distances(oracle::to_grid(g.adjacency));
        const int D = drg.diameter;
        for (int x = 0; x < g.n; ++x)
            for (int y = 0; y < g.n; ++y)
                for (int i = 0; i <= D; ++i)
                    for (int j = 0; j <= D; ++j)
                        REQUIRE(drg.intersection(dist[x][y], i, j) == oracle::pair_count(dist, x, y, i, j));
        CHECK(bose_mesner_product_defect(drg) == 0);
    }
}

TEST_CASE("hexagon intersection array")
{
    const auto drg = compute_distance_data(generate_family(Family::Cycle, 6));
    CHECK(drg.diameter == 3);
    CHECK(drg.valency == 2);
    CHECK(drg.intersection.b(0) == 2);
    CHECK(drg.intersection.b(1) == 1);
    CHECK(drg.intersection.b(2) == 1);
    CHECK(drg.intersection.c(1) == 1);
    CHECK(drg.intersection.c(2) == 1);
    CHECK(drg.intersection.c(3) == 2);
    for (int i = 0; i <= 3; ++i)
        CHECK(drg.intersection.a(i) == 0);
    CHECK_FALSE(drg.below_min_diameter);
}

TEST_CASE("graphs that are not distance-regular")
{
    CHECK(kind_of([] { compute_distance_data(fixture("path3.edges")); }) == ErrorKind::NotRegular);

    // Triangular prism: cubic, but an edge inside a triangle has a common
    // neighbour and an edge between triangles has none.
    const auto prism = load_graph("6 9\n0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n0 3\n1 4\n2 5\n", GraphFormat::EdgeList);
    try {
        compute_distance_data(prism);
        FAIL("prism accepted");
    } catch (const NotDistanceRegularError& e) {
        const auto& w = e.witness();
        const auto dist = oracle::floyd_distances(oracle::to_grid(prism.adjacency));
        CHECK(w.count1 != w.count2);
        CHECK(dist[w.x1][w.y1] == w.h);
        CHECK(dist[w.x2][w.y2] == w.h);
        CHECK(oracle::pair_count(dist, w.x1, w.y1, w.i, w.j) == w.count1);
        CHECK(oracle::pair_count(dist, w.x2, w.y2, w.i, w.j) == w.count2);
    }

    const auto petersen = compute_distance_data(fixture("petersen.edges"));
    CHECK(petersen.diameter == 2);
    CHECK(petersen.below_min_diameter);
}
