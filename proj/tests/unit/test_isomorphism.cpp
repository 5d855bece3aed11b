#include <doctest.h>

#include <random>

#include "kst/constructions.hpp"
#include "kst/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace kst;

TEST_CASE("canonical form is invariant under relabelling")
{
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 11);
        const Graph g = oracle::random_graph(n, 0.45, rng);
        const Graph h = oracle::shuffled(g, rng);
        CHECK(canonical_form(g).graph == canonical_form(h).graph);
        CHECK(canonical_key(g) == canonical_key(h));
    }
}

TEST_CASE("canonical labelling maps the graph onto its form")
{
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = oracle::random_graph(9, 0.5, rng);
        const CanonicalForm c = canonical_form(g);
        for (int p = 0; p < 9; ++p)
            for (int q = 0; q < 9; ++q)
                CHECK(c.graph.has_edge(p, q) == g.has_edge(c.labelling[static_cast<std::size_t>(p)], c.labelling[static_cast<std::size_t>(q)]));
    }
}

TEST_CASE("hard regular cases stay distinct")
{
    // Same degree sequence, refinement alone cannot split them.
    const Graph two_triangles = k_copies(complete(3), 2);
    const Graph hexagon = cycle(6);
    CHECK(canonical_key(two_triangles) != canonical_key(hexagon));
    CHECK_FALSE(are_isomorphic(two_triangles, hexagon));
    std::mt19937_64 rng(9);
    const Graph p = oracle::shuffled(petersen(), rng);
    CHECK(are_isomorphic(p, petersen()));
    const int offs[] = {1, 3};
    CHECK_FALSE(are_isomorphic(circulant(10, offs), petersen()));
}

// Number of graphs on n unlabelled vertices (OEIS A000088).
TEST_CASE("unlabelled graph counts")
{
    const long expected[] = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
    for (int n = 0; n <= 8; ++n) CHECK(static_cast<long>(unlabeled_graphs(n).size()) == expected[n]);
    CHECK_THROWS_AS(unlabeled_graphs(11), RangeError);
}

TEST_CASE("find_isomorphism returns a valid map")
{
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(10, 0.3, rng);
        const Graph h = oracle::shuffled(g, rng);
        const auto m = find_isomorphism(g, h);
        REQUIRE(m.has_value());
        for (auto [u, v] : g.edges()) CHECK(h.has_edge((*m)[static_cast<std::size_t>(u)], (*m)[static_cast<std::size_t>(v)]));
    }
    CHECK_FALSE(find_isomorphism(path(4), complete_bipartite(1, 3)).has_value());
}
