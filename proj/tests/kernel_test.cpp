#include <doctest.h>

#include "mis3/error.hpp"
#include "mis3/gen.hpp"
#include "mis3/kernel.hpp"
#include "mis3/oracle.hpp"
#include "test_util.hpp"

using namespace mis3;
using mis3::testing::make;
using mis3::testing::naive_alpha;

TEST_CASE("max_bipartite_matching") {
    std::vector<VertexId> even{0, 2}, odd{1, 3};
    CHECK(max_bipartite_matching(gen::named("cycle-4"), even, odd).size() == 2);

    Graph k33 = gen::named("k33");
    std::vector<VertexId> l{0, 1, 2}, r{3, 4, 5};
    auto m = max_bipartite_matching(k33, l, r);
    CHECK(m.size() == 3);
    for (auto [u, v] : m) CHECK(k33.adjacent(u, v));

    std::vector<VertexId> mid{1}, ends{0, 2};
    CHECK(max_bipartite_matching(gen::named("path-3"), mid, ends).size() == 1);

    SUBCASE("errors") {
        Graph tri = gen::named("cycle-3");
        std::vector<VertexId> a{0}, b{1, 2};
        CHECK_THROWS_AS(max_bipartite_matching(tri, a, b), InputError);
        std::vector<VertexId> overlap{0, 1};
        CHECK_THROWS_AS(max_bipartite_matching(gen::named("path-3"), overlap, ends), InputError);
        std::vector<VertexId> missing{0};
        CHECK_THROWS_AS(max_bipartite_matching(gen::named("path-3"), missing, mid), InputError);
    }
}

TEST_CASE("property: matching size agrees with a brute-force search") {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        gen::Rng rng(seed);
        std::size_t nl = 1 + rng.below(6), nr = 1 + rng.below(6);
        std::vector<std::pair<std::size_t, std::size_t>> es;
        BipartiteMatcher bm(nl, nr);
        for (std::size_t i = 0; i < nl; ++i)
            for (std::size_t j = 0; j < nr; ++j)
                if (rng.chance(0.35)) {
                    es.emplace_back(i, j);
                    bm.add_edge(i, j);
                }
        std::size_t best = 0;
        for (std::uint64_t mask = 0; mask < (1ULL << es.size()); ++mask) {
            std::vector<char> ul(nl, 0), ur(nr, 0);
            std::size_t cnt = 0;
            bool ok = true;
            for (std::size_t e = 0; e < es.size() && ok; ++e)
                if (mask >> e & 1) {
                    auto [i, j] = es[e];
                    if (ul[i] || ur[j]) ok = false;
                    ul[i] = ur[j] = 1;
                    ++cnt;
                }
            if (ok) best = std::max(best, cnt);
            if (es.size() > 16) break;
        }
        if (es.size() > 16) continue;
        CHECK(bm.solve() == best);
        auto [cl, cr] = bm.minimum_vertex_cover();
        std::size_t cover = 0;
        for (char c : cl) cover += c;
        for (char c : cr) cover += c;
        CHECK(cover == best);
        for (auto [i, j] : es) CHECK((cl[i] || cr[j]));
    }
}

TEST_CASE("nt_kernel") {
    SUBCASE("triangle is all half") {
        auto k = nt_kernel(gen::named("cycle-3"));
        CHECK(k.c0.empty());
        CHECK(k.i0.empty());
        CHECK(k.v0 == std::vector<VertexId>{0, 1, 2});
        CHECK(k.lp_value.twice == 3);
        CHECK(k.lp_value.to_string() == "1.5");
    }
    SUBCASE("star") {
        auto k = nt_kernel(make(4, {{0, 1}, {0, 2}, {0, 3}}));
        CHECK(k.c0 == std::vector<VertexId>{0});
        CHECK(k.v0.empty());
        CHECK(k.i0 == std::vector<VertexId>{1, 2, 3});
        CHECK(k.lp_value.to_string() == "1");
    }
    SUBCASE("edgeless") {
        auto k = nt_kernel(Graph(3));
        CHECK(k.i0.size() == 3);
        CHECK(k.lp_value.twice == 0);
    }
}

TEST_CASE("vc_decide and mvc_solve") {
    Graph p = gen::named("petersen");
    auto yes = vc_decide(p, 6);
    CHECK(yes.decision);
    REQUIRE(yes.cover);
    CHECK(yes.cover->size() <= 6);
    CHECK(is_vertex_cover(p, *yes.cover));
    CHECK_FALSE(vc_decide(p, 5).decision);
    CHECK(vc_decide(make(2, {{0, 1}}), 1).decision);
    CHECK_FALSE(vc_decide(make(2, {{0, 1}}), 0).decision);
    CHECK_THROWS_AS(vc_decide(p, -1), InputError);

    CHECK(mvc_solve(gen::named("cycle-3")).size == 2);
    CHECK(mvc_solve(gen::named("cycle-5")).size == 3);
    CHECK(mvc_solve(p).size == 6);
    CHECK(mvc_solve(Graph{}).size == 0);
}

TEST_CASE("property: kernel invariants on random graphs") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        CAPTURE(seed);
        Graph g = gen::random_gnp(2 + seed % 12, 0.3, seed);
        auto k = nt_kernel(g);
        CHECK(k.c0.size() + k.v0.size() + k.i0.size() == g.vertex_count());
        CHECK(k.lp_value.twice == 2 * static_cast<long>(k.c0.size()) + static_cast<long>(k.v0.size()));
        CHECK(k.lp_value.twice == mis3::testing::brute_half_lp_twice(g));
        CHECK(is_independent_set(g, k.i0));
        for (VertexId u : k.i0)
            for (VertexId v : g.neighbors(u)) CHECK(std::binary_search(k.c0.begin(), k.c0.end(), v));
        Graph v0 = induced_subgraph(g, k.v0);
        std::size_t tau = g.vertex_count() - naive_alpha(g);
        CHECK(tau == k.c0.size() + (v0.vertex_count() - naive_alpha(v0)));
        CHECK(2 * (v0.vertex_count() - naive_alpha(v0)) >= v0.vertex_count());

        auto mvc = mvc_solve(g);
        CHECK(mvc.size == tau);
        CHECK(is_vertex_cover(g, mvc.cover));
        for (long kk = 0; kk <= static_cast<long>(g.vertex_count()); ++kk) {
            auto d = vc_decide(g, kk);
            CHECK(d.decision == (static_cast<long>(tau) <= kk));
            if (d.decision) {
                REQUIRE(d.cover);
                CHECK(static_cast<long>(d.cover->size()) <= kk);
                CHECK(is_vertex_cover(g, *d.cover));
            }
        }
    }
}
