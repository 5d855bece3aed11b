#include <doctest.h>

#include "kst/constructions.hpp"
#include "kst/majorization.hpp"

using namespace kst;

TEST_CASE("real vectors")
{
    CHECK_THROWS_AS(RealVector({1, 2}), ContractError);
    const RealVector y({3, 1}), x({2, 2});
    CHECK(majorizes(y, x));
    CHECK_FALSE(majorizes(x, y));
    CHECK(weakly_majorizes(RealVector({3, 2}), RealVector({2, 2})));
    CHECK_FALSE(majorizes(RealVector({3, 2}), RealVector({2, 2})));
    CHECK(RealVector::sorted({1, 5, 3}).values() == std::vector<double>{5, 3, 1});
    CHECK_THROWS_AS(majorizes(RealVector({1}), RealVector({1, 0})), ContractError);
}

TEST_CASE("degree sequences")
{
    const DegreeSequence star = degree_sequence(complete_bipartite(1, 3));
    const DegreeSequence p4 = degree_sequence(path(4));
    CHECK(majorizes(star, p4));
    CHECK_FALSE(majorizes(p4, star));
    CHECK(majorizes(p4, p4));
}

TEST_CASE("rotation preconditions")
{
    const Graph g = path(4);  // 0-1-2-3
    const Graph r = rotate_edge(g, 0, 1, 3);
    CHECK(r.has_edge(3, 1));
    CHECK_FALSE(r.has_edge(0, 1));
    CHECK(r.edge_count() == g.edge_count());
    CHECK_THROWS_AS(rotate_edge(g, 0, 2, 1), ContractError);        // vw not an edge
    CHECK_THROWS_AS(rotate_edge(g, 0, 1, 1), ContractError);        // u = w
    CHECK_THROWS_AS(rotate_edge(g, 0, 1, 2), ContractError);        // uw already an edge
    CHECK_THROWS_AS(rotate_edge(path(5), 1, 0, 4), ContractError);  // d(u) < d(v)
}

TEST_CASE("property suites")
{
    CHECK(verify_norm_monotonicity(500, 1).ok);
    CHECK(verify_inner_product_monotonicity(500, 1).ok);
    const RotationSuiteReport r = verify_rotation_majorization(5);
    CHECK(r.graphs == 1 + 2 + 4 + 11 + 34);
    CHECK(r.rotations > 0);
    CHECK(r.ok);
}
