#include <doctest.h>

#include <random>

#include "kst/constructions.hpp"
#include "kst/graph6.hpp"
#include "kst/minor.hpp"
#include "support/oracles.hpp"

using namespace kst;

TEST_CASE("branch-set search agrees with the labelling oracle")
{
    std::mt19937_64 rng(41);
    const std::vector<Graph> patterns{complete_bipartite(2, 3), complete_bipartite(1, 3), complete(4), cycle(4),
                                      k_copies(complete(2), 2), complete_bipartite(2, 2)};
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const double p = 0.2 + 0.1 * static_cast<double>(rng() % 6);
        const Graph host = oracle::random_graph(n, p, rng);
        const Graph& pattern = patterns[static_cast<std::size_t>(trial) % patterns.size()];
        const auto w = has_minor(host, pattern);
        CHECK(w.has_value() == oracle::has_minor_by_labelling(host, pattern));
        if (w) CHECK(is_valid_witness(host, pattern, *w));
    }
}

TEST_CASE("classical minors")
{
    CHECK(has_minor(petersen(), complete(5)).has_value());
    CHECK(has_minor(petersen(), complete_bipartite(3, 3)).has_value());
    CHECK_FALSE(has_minor(cycle(10), complete(3 + 1)).has_value());
    CHECK(has_minor(cycle(10), complete(3)).has_value());
    // Trees have no cycle minor.
    CHECK_FALSE(has_minor(complete_bipartite(1, 6), cycle(4)).has_value());
    CHECK_THROWS_AS(has_minor(complete(15), complete(3)), CapacityError);
}

TEST_CASE("witness validation rejects bad models")
{
    const Graph host = cycle(5);
    const Graph pattern = complete(3);
    MinorWitness good{{VertexSet{0}, VertexSet{1}, VertexSet{2, 3, 4}}};
    CHECK(is_valid_witness(host, pattern, good));
    MinorWitness disconnected{{VertexSet{0, 2}, VertexSet{1}, VertexSet{3, 4}}};
    CHECK_FALSE(is_valid_witness(host, pattern, disconnected));
    MinorWitness overlap{{VertexSet{0, 1}, VertexSet{1, 2}, VertexSet{3, 4}}};
    CHECK_FALSE(is_valid_witness(host, pattern, overlap));
    MinorWitness missing_edge{{VertexSet{0}, VertexSet{2}, VertexSet{4}}};
    CHECK_FALSE(is_valid_witness(host, pattern, missing_edge));
}

TEST_CASE("star minors")
{
    CHECK(has_star_minor(complete_bipartite(1, 5), 5));
    CHECK_FALSE(has_star_minor(complete_bipartite(1, 5), 6));
    // A path contracts to at most two neighbours.
    CHECK_FALSE(has_star_minor(path(20), 3));
    // Spider with three legs of length 2.
    const Graph spider = Graph::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    CHECK(has_star_minor(spider, 3));
    CHECK_FALSE(has_star_minor(spider, 4));
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const Graph g = oracle::random_graph(7, 0.3, rng);
        const int b = 2 + trial % 4;
        CHECK(has_star_minor(g, b) == oracle::has_minor_by_labelling(g, complete_bipartite(1, b)));
    }
}

TEST_CASE("K_{s,t} freeness of the constructions")
{
    CHECK(is_kst_minor_free(f_st(9, StParams(2, 3)), 2, 3));
    CHECK(is_kst_minor_free(extremal_gstar(12, StParams(2, 5)), 2, 5));
    CHECK_FALSE(is_kst_minor_free(add_edge(f_st(9, StParams(2, 3)), 1, 4), 2, 3));
    // Pattern is symmetric in a and b.
    CHECK(is_kab_minor_free(cycle(8), 2, 3) == is_kab_minor_free(cycle(8), 3, 2));
}

TEST_CASE("(s,t)-property and clique reduction")
{
    const StParams p(2, 5);
    CHECK(has_st_property(complete(5), p));
    CHECK(has_st_property(h_st_complement(p), p));
    CHECK_FALSE(has_st_property(complete(6), p));
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph h = oracle::random_graph(6 + trial % 3, 0.5, rng);
        const Graph g = join(complete(1), h);
        const CliqueReductionReport r = verify_clique_reduction(g, 2, 4);
        CHECK(r.ok);
        CHECK(minor_free_by_clique_reduction(g, VertexSet{0}, 2, 4) == r.minor_free);
    }
    CHECK_THROWS_AS(verify_clique_reduction(cycle(5), 2, 3), ContractError);
    CHECK_THROWS_AS(minor_free_by_clique_reduction(cycle(5), VertexSet{0}, 2, 3), ContractError);
    // Large host, small components.
    const Graph big = extremal_gstar(60, StParams(3, 5));
    CHECK(minor_free_by_clique_reduction(big, *clique_dominating_set(big, 2), 3, 5));
}

TEST_CASE("clique dominating sets")
{
    CHECK(clique_dominating_set(f_st(12, StParams(4, 4)), 3) == VertexSet{0, 1, 2});
    CHECK_FALSE(clique_dominating_set(cycle(5), 1).has_value());
    CHECK(clique_dominating_set(cycle(5), 0) == VertexSet{});
}

TEST_CASE("complement component criterion")
{
    const ComplementCriterionReport a = verify_complement_component_criterion(4, 2);
    CHECK(a.graphs == 1024);
    CHECK(a.counterexamples == 0);
    CHECK(a.ok);
    CHECK_THROWS_AS(verify_complement_component_criterion(7, 3), RangeError);
}

TEST_CASE("star-minor edge bound")
{
    const StarMinorEdgeReport r = verify_star_minor_edge_bound(3, 5);
    CHECK(r.bound == 3 + 2);
    CHECK(r.violations == 0);
    CHECK(r.equality_attained);
    CHECK(r.max_edges == r.bound);
    const Graph w = from_graph6(r.witness);
    CHECK(w.edge_count() == r.bound);
    CHECK_FALSE(has_star_minor(w, 3));
    CHECK_THROWS_AS(verify_star_minor_edge_bound(3, 9), RangeError);
}
