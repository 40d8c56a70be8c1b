#include <doctest.h>

#include "mis3/error.hpp"
#include "mis3/gen.hpp"
#include "mis3/oracle.hpp"
#include "test_util.hpp"

using namespace mis3;
using mis3::testing::make;
using mis3::testing::naive_alpha;

TEST_CASE("oracle on fixtures") {
    CHECK(oracle::brute_force_mis(gen::named("petersen")).size == 4);
    CHECK(oracle::brute_force_mis(gen::named("cycle-5")).size == 2);
    CHECK(oracle::brute_force_mis(gen::named("k4")).size == 1);
    CHECK(oracle::brute_force_mis(gen::named("k23")).size == 3);
    CHECK(oracle::brute_force_mis(Graph{}).size == 0);
    CHECK(oracle::brute_force_mis(Graph(3)).witness == std::vector<VertexId>{0, 1, 2});
}

TEST_CASE("oracle respects its limit") {
    CHECK_THROWS_AS(oracle::brute_force_mis(gen::named("path-26")), InputError);
    CHECK(oracle::brute_force_mis(gen::named("path-26"), 30).size == 13);
    CHECK_THROWS_AS(oracle::brute_force_mis(gen::named("path-70"), 70), InputError);
}

TEST_CASE("oracle vc decision") {
    Graph p = gen::named("petersen");
    CHECK(oracle::brute_force_vc_decide(p, 6));
    CHECK_FALSE(oracle::brute_force_vc_decide(p, 5));
    CHECK_FALSE(oracle::brute_force_vc_decide(p, -1));
    CHECK(oracle::brute_force_vc_decide(Graph{}, 0));
}

TEST_CASE("property: both oracle regimes agree with naive recursion") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        CAPTURE(seed);
        // Sizes straddle the enumeration/branching boundary.
        std::size_t n = 2 + seed % 23;
        Graph g = gen::random_gnp(n, 0.15 + 0.05 * static_cast<double>(seed % 6), seed);
        auto r = oracle::brute_force_mis(g);
        CHECK(r.size == r.witness.size());
        CHECK(is_independent_set(g, r.witness));
        if (n <= 18) CHECK(r.size == naive_alpha(g));
    }
}

TEST_CASE("oracle works on non-contiguous ids") {
    Graph g = make(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
    g.remove_vertex(0);
    g.remove_vertex(3);
    VertexId s = g.add_vertex();
    g.add_edge(s, 1);
    auto r = oracle::brute_force_mis(g);
    CHECK(r.size == naive_alpha(g));
    CHECK(is_independent_set(g, r.witness));
}
