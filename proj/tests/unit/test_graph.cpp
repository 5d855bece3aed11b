#include <doctest.h>

#include <random>

#include "kst/graph.hpp"
#include "support/oracles.hpp"

using namespace kst;

TEST_CASE("basic families have the expected sizes")
{
    CHECK(complete(5).edge_count() == 10);
    CHECK(complete(1).edge_count() == 0);
    CHECK(empty_graph(4).edge_count() == 0);
    CHECK(complete_bipartite(2, 3).edge_count() == 6);
    CHECK(complete_bipartite(2, 3).order() == 5);
    CHECK(cycle(6).edge_count() == 6);
    CHECK(is_regular(cycle(7), 2));
    CHECK(path(5).edge_count() == 4);
    CHECK(girth(cycle(9)) == 9);
    CHECK(girth(path(6)) == 0);
    CHECK(girth(complete(4)) == 3);
}

TEST_CASE("circulant offsets")
{
    const int offs[] = {1, 2};
    const Graph g = circulant(8, offs);
    CHECK(is_regular(g, 4));
    CHECK(g.edge_count() == 16);
}

TEST_CASE("join and union edge counts")
{
    const Graph a = cycle(4), b = path(3);
    const Graph u = disjoint_union(a, b);
    CHECK(u.order() == 7);
    CHECK(u.edge_count() == 4 + 2);
    CHECK(components(u).size() == 2);
    const Graph j = join(a, b);
    CHECK(j.edge_count() == 4 + 2 + 4 * 3);
    CHECK(is_connected(j));
    CHECK(k_copies(complete(3), 4).edge_count() == 12);
    CHECK(k_copies(complete(3), 0).order() == 0);
}

TEST_CASE("complement is an involution and partitions the pairs")
{
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + trial % 12;
        const Graph g = oracle::random_graph(n, 0.4, rng);
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() == n * (n - 1) / 2);
    }
}

TEST_CASE("edge edits")
{
    const Graph g = path(3);
    CHECK(add_edge(g, 0, 2).edge_count() == 3);
    CHECK_THROWS_AS(add_edge(g, 0, 1), ContractError);
    CHECK_THROWS_AS(delete_edge(g, 0, 2), ContractError);
    CHECK_THROWS_AS(add_edge(g, 1, 1), ContractError);
    CHECK(delete_edge(g, 0, 1).edge_count() == 1);
}

TEST_CASE("subdivision picks the minimum degree-sum edge")
{
    // Star K_{1,3} plus a pendant edge on leaf 1: edge (1,4) has degree sum 2+1.
    const Graph g = Graph::from_edges(5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}});
    const Graph s = subdivide_min_edge(g);
    CHECK(s.order() == 6);
    CHECK(s.edge_count() == 5);
    CHECK(s.has_edge(1, 5));
    CHECK(s.has_edge(4, 5));
    CHECK_FALSE(s.has_edge(1, 4));
    CHECK_THROWS(subdivide_min_edge(empty_graph(3)));
}

TEST_CASE("contraction merges neighbourhoods")
{
    const Graph c = contract_edge(cycle(5), 0, 1);
    CHECK(c.order() == 4);
    CHECK(is_regular(c, 2));
    CHECK_THROWS_AS(contract_edge(cycle(5), 0, 2), ContractError);
    // Contracting an edge of a triangle removes the parallel edge.
    CHECK(contract_edge(complete(3), 0, 1).edge_count() == 1);
}

TEST_CASE("induced subgraphs and components")
{
    const Graph g = disjoint_union(complete(3), cycle(4));
    const auto comps = components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0, 1, 2});
    CHECK(induced(g, comps[1]) == cycle(4));
    CHECK(induces_connected(g, VertexSet{3, 4}.mask()));
    CHECK_FALSE(induces_connected(g, VertexSet{0, 3}.mask()));
    CHECK(reach(g, bit(0), g.vertices().mask()) == comps[0].mask());
}

TEST_CASE("degree sequences are sorted and sum to twice the edges")
{
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = oracle::random_graph(10, 0.3, rng);
        const DegreeSequence d = degree_sequence(g);
        CHECK(std::is_sorted(d.values.rbegin(), d.values.rend()));
        CHECK(d.sum() == 2 * g.edge_count());
    }
}

TEST_CASE("capacity is enforced")
{
    CHECK_NOTHROW(complete(64));
    CHECK_THROWS_AS(complete(65), CapacityError);
    CHECK_THROWS_AS(disjoint_union(complete(40), complete(30)), CapacityError);
}
