#include <algorithm>
#include <set>

#include "doctest.h"
#include "evencycle/generators.hpp"
#include "evencycle/graph.hpp"
#include "evencycle/oracle.hpp"
#include "test_util.hpp"

using namespace evencycle;
using namespace testutil;

TEST_SUITE("generators") {

TEST_CASE("gen_random: shape, determinism, edge cases") {
    Graph g = gen_random(20, 35, 4);
    CHECK(g.n == 20);
    CHECK(g.m == 35);
    CHECK(serialize_graph(gen_random(20, 35, 4)) == serialize_graph(g));

    // forced complete graph
    Graph k5 = gen_random(5, 10, 99);
    CHECK(k5.m == 10);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) CHECK(k5.has_edge(u, v));

    CHECK(gen_random(7, 0, 1).m == 0);
    CHECK(gen_random(0, 0, 1).n == 0);

    CHECK_THROWS_AS(gen_random(4, 7, 1), std::invalid_argument);   // m > C(n,2)
    CHECK_THROWS_AS(gen_random(-1, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(gen_random(4, -2, 1), std::invalid_argument);
}

TEST_CASE("gen_random: both fill strategies produce exactly m distinct edges") {
    // sparse (rejection path) and dense (pool path) around the half-universe cut
    for (long long m : {5LL, 100LL, 180LL}) {
        Graph g = gen_random(20, m, 7);  // universe 190
        CHECK(g.m == m);
        std::set<std::pair<int, int>> uniq(g.edges.begin(), g.edges.end());
        CHECK(uniq.size() == static_cast<size_t>(m));
    }
}

TEST_CASE("gen_planted_cycle: the promised cycle is real") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        PlantedInstance inst = gen_planted_cycle(20, 40, 3, seed);
        CHECK(inst.graph.n == 20);
        CHECK(inst.graph.m == 40);
        CHECK(inst.cycle.length() == 6);
        CHECK(validate_cycle(inst.graph, inst.cycle, 6));
    }
    // determinism
    CHECK(serialize_graph(gen_planted_cycle(20, 40, 3, 5).graph) ==
          serialize_graph(gen_planted_cycle(20, 40, 3, 5).graph));
    CHECK(gen_planted_cycle(20, 40, 3, 5).cycle.vertices ==
          gen_planted_cycle(20, 40, 3, 5).cycle.vertices);
}

TEST_CASE("gen_planted_cycle: tight instances") {
    // n = 2k and m = 2k: the instance is exactly the cycle
    PlantedInstance tight = gen_planted_cycle(4, 4, 2, 11);
    CHECK(tight.graph.m == 4);
    CHECK(validate_cycle(tight.graph, tight.cycle, 4));
    CHECK(oracle_has_cycle(tight.graph, 4).has_value());

    CHECK_THROWS_AS(gen_planted_cycle(3, 4, 2, 1), std::invalid_argument);  // n < 2k
    CHECK_THROWS_AS(gen_planted_cycle(8, 3, 2, 1), std::invalid_argument);  // m < 2k
    CHECK_THROWS_AS(gen_planted_cycle(8, 99, 2, 1), std::invalid_argument); // m > C(n,2)
}

TEST_CASE("polarity graphs: sizes and C_4-freeness") {
    Graph q2 = gen_c4_free_polarity(2);
    CHECK(q2.n == 7);
    CHECK(q2.m == 9);
    CHECK_FALSE(oracle_has_cycle(q2, 4).has_value());

    Graph q3 = gen_c4_free_polarity(3);
    CHECK(q3.n == 13);
    CHECK(q3.m == 24);
    CHECK_FALSE(oracle_has_cycle(q3, 4).has_value());

    for (int q : {5, 7, 11}) {
        Graph g = gen_c4_free_polarity(q);
        CHECK(g.n == q * q + q + 1);
        CHECK(g.m == static_cast<long long>(q) * (q + 1) * (q + 1) / 2);
        CHECK_FALSE(oracle_has_cycle(g, 4).has_value());
        // q+1 self-orthogonal points of degree q, the rest q+1
        int low = 0;
        for (int v = 0; v < g.n; ++v) {
            int d = g.degree(v);
            CHECK(d >= q);
            CHECK(d <= q + 1);
            if (d == q) ++low;
        }
        CHECK(low == q + 1);
    }
}

TEST_CASE("polarity rejects non-prime q") {
    for (int q : {0, 1, 4, 6, 8, 9, 15}) {
        CHECK_THROWS_AS(gen_c4_free_polarity(q), std::invalid_argument);
    }
}

TEST_CASE("high-girth generator respects its promise") {
    for (uint64_t seed = 0; seed < 6; ++seed) {
        Graph g = gen_high_girth(30, 6, seed);
        CHECK(g.n == 30);
        CHECK(g.m > 0);
        CHECK_FALSE(oracle_has_cycle(g, 3).has_value());
        CHECK_FALSE(oracle_has_cycle(g, 4).has_value());
        CHECK_FALSE(oracle_has_cycle(g, 5).has_value());
    }
    Graph g8 = gen_high_girth(40, 8, 3);
    for (int L = 3; L <= 7; ++L) CHECK_FALSE(oracle_has_cycle(g8, L).has_value());

    // impossible girth target forces a forest
    Graph forest = gen_high_girth(12, 13, 1);
    CHECK(forest.m <= 11);
    for (int L = 3; L <= 12; ++L) CHECK_FALSE(oracle_has_cycle(forest, L).has_value());

    CHECK(serialize_graph(gen_high_girth(25, 7, 9)) ==
          serialize_graph(gen_high_girth(25, 7, 9)));
    CHECK_THROWS_AS(gen_high_girth(10, 5, 1), std::invalid_argument);  // target < 6
    CHECK_THROWS_AS(gen_high_girth(-3, 8, 1), std::invalid_argument);
}

TEST_CASE("high-girth graphs are reasonably dense, not degenerate") {
    // the greedy pass should comfortably beat a spanning tree at girth 6
    Graph g = gen_high_girth(60, 6, 5);
    CHECK(g.m >= 60);
}

}  // TEST_SUITE
