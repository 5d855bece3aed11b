#include <doctest.h>

#include <random>

#include "kst/constructions.hpp"
#include "kst/graph6.hpp"
#include "kst/isomorphism.hpp"
#include "support/oracles.hpp"

using namespace kst;

// Reference strings produced by networkx.to_graph6_bytes(header=False).
TEST_CASE("known graph6 strings")
{
    CHECK(to_graph6(complete(5)) == "D~{");
    CHECK(to_graph6(empty_graph(1)) == "@");
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(cycle(4)) == "Cl");
    CHECK(to_graph6(path(3)) == "Bg");
    CHECK(to_graph6(complete(64)).substr(0, 10) == "~?@?~~~~~~");
    CHECK(to_graph6(complete(64)).size() == 340);
    CHECK(to_graph6(empty_graph(63)).substr(0, 4) == "~??~");
    // networkx labels the Petersen graph differently.
    CHECK(are_isomorphic(from_graph6("IheA@GUAo"), petersen()));
}

TEST_CASE("parse accepts a header and trailing whitespace")
{
    CHECK(from_graph6(">>graph6<<D~{\n") == complete(5));
    CHECK(from_graph6("D~{  ") == complete(5));
}

TEST_CASE("malformed graph6 is rejected")
{
    CHECK_THROWS_AS(from_graph6(""), ParseError);
    CHECK_THROWS_AS(from_graph6("D~"), ParseError);     // too short
    CHECK_THROWS_AS(from_graph6("D~{?"), ParseError);   // too long
    CHECK_THROWS_AS(from_graph6("D~\x7f"), ParseError); // byte out of range
    CHECK_THROWS_AS(from_graph6("Bx"), ParseError);     // padding bits set
}

TEST_CASE("random graphs round-trip byte for byte")
{
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = static_cast<int>(rng() % 65);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const std::string s = to_graph6(g);
        CHECK(from_graph6(s) == g);
        CHECK(to_graph6(from_graph6(s)) == s);
    }
}

TEST_CASE("pair masks follow graph6 bit order")
{
    CHECK(pair_index(0, 1) == 0);
    CHECK(pair_index(0, 2) == 1);
    CHECK(pair_index(1, 2) == 2);
    CHECK(pair_index(0, 3) == 3);
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng() % 12);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        CHECK(graph_from_pair_mask(n, pair_mask(g)) == g);
    }
    CHECK_THROWS_AS(graph_from_pair_mask(3, 0b1000), ContractError);
    CHECK_THROWS_AS(pair_mask(complete(12)), CapacityError);
}
