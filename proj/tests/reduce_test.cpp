#include <doctest.h>

#include "mis3/error.hpp"
#include "mis3/gen.hpp"
#include "mis3/oracle.hpp"
#include "mis3/reduce.hpp"
#include "test_util.hpp"

using namespace mis3;
using mis3::testing::make;
using mis3::testing::naive_alpha;

TEST_CASE("fold_degree1") {
    SUBCASE("single edge") {
        auto r = fold_degree1(make(2, {{0, 1}}), 0);
        CHECK(r.graph.empty());
        CHECK(r.gain == 1);
        CHECK(r.event.kind == RuleKind::Fold1);
    }
    SUBCASE("P3 from an end") {
        auto r = fold_degree1(gen::named("path-3"), 0);
        CHECK(r.graph.vertices() == std::vector<VertexId>{2});
        CHECK(r.graph.edge_count() == 0);
    }
    SUBCASE("star leaf") {
        auto r = fold_degree1(make(4, {{0, 1}, {0, 2}, {0, 3}}), 1);
        CHECK(r.graph.vertices() == std::vector<VertexId>{2, 3});
        CHECK(r.graph.edge_count() == 0);
        CHECK(r.gain == 1);
    }
    SUBCASE("wrong degree") { CHECK_THROWS_AS(fold_degree1(gen::named("path-3"), 1), InputError); }
}

TEST_CASE("fold_degree2") {
    SUBCASE("triangle, case a") {
        auto r = fold_degree2(gen::named("cycle-3"), 1);
        CHECK(r.graph.empty());
        CHECK(r.event.kind == RuleKind::Fold2a);
        CHECK_FALSE(r.event.introduced);
    }
    SUBCASE("P3 middle, case b") {
        auto r = fold_degree2(gen::named("path-3"), 1);
        CHECK(r.event.kind == RuleKind::Fold2b);
        REQUIRE(r.event.introduced);
        CHECK(*r.event.introduced == 3);
        CHECK(r.graph.vertices() == std::vector<VertexId>{3});
    }
    SUBCASE("C5 folds to a triangle") {
        auto r = fold_degree2(gen::named("cycle-5"), 0);
        CHECK(r.graph.vertices() == std::vector<VertexId>{2, 3, 5});
        CHECK(r.graph.edge_count() == 3);
        CHECK(r.gain + naive_alpha(r.graph) == 2);
    }
    SUBCASE("wrong degree") { CHECK_THROWS_AS(fold_degree2(gen::named("k4"), 0), InputError); }
}

TEST_CASE("find_dominated") {
    auto k3 = find_dominated(gen::named("cycle-3"));
    REQUIRE(k3);
    CHECK(*k3 == Domination{1, 0});
    CHECK_FALSE(find_dominated(gen::named("cycle-5")));

    Graph diamond = make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    auto d = find_dominated(diamond);
    REQUIRE(d);
    auto nu = closed_neighborhood(diamond, d->dominator);
    auto nv = closed_neighborhood(diamond, d->dominated);
    CHECK(std::includes(nv.begin(), nv.end(), nu.begin(), nu.end()));
    CHECK(*d == Domination{1, 0});

    auto removed = remove_dominated(diamond, *d);
    CHECK(removed.gain == 0);
    CHECK_THROWS_AS(remove_dominated(diamond, Domination{2, 3}), InputError);
}

TEST_CASE("find_structure") {
    SUBCASE("K2,3") {
        auto s = find_structure(gen::named("k23"));
        REQUIRE(s);
        CHECK(*s == Structure{StructureKind::S23, {0, 1}, {2, 3, 4}});
    }
    SUBCASE("Petersen has none") {
        Graph p = gen::named("petersen");
        auto brute = mis3::testing::brute_structures(p);
        CHECK(brute.s23 + brute.s33 + brute.s34 == 0);
        CHECK_FALSE(find_structure(p));
    }
    SUBCASE("K3,4: the degree-3 side forms a 2-3 structure first") {
        Graph g = gen::named("k34");
        auto s = find_structure(g);
        REQUIRE(s);
        CHECK(*s == Structure{StructureKind::S23, {3, 4}, {0, 1, 2}});
        auto s34 = find_structure_of_kind(g, StructureKind::S34);
        REQUIRE(s34);
        CHECK(*s34 == Structure{StructureKind::S34, {0, 1, 2}, {3, 4, 5, 6}});
    }
    SUBCASE("gadgets") {
        auto s23 = find_structure(gen::named("s23-gadget"));
        REQUIRE(s23);
        CHECK(*s23 == Structure{StructureKind::S23, {10, 11}, {12, 13, 14}});
        auto s33 = find_structure(gen::named("s33-gadget"));
        REQUIRE(s33);
        CHECK(*s33 == Structure{StructureKind::S33, {10, 14, 15}, {11, 12, 13}});
        auto s34 = find_structure(gen::named("s34-gadget"));
        REQUIRE(s34);
        CHECK(*s34 == Structure{StructureKind::S34, {10, 11, 12}, {13, 14, 15, 16}});
    }
}

TEST_CASE("find_structure agrees with a definition-level scan") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        Graph g = gen::random_bounded_degree(6 + seed % 8, 4, seed);
        auto brute = mis3::testing::brute_structures(g);
        CHECK(find_structure_of_kind(g, StructureKind::S23).has_value() == (brute.s23 > 0));
        CHECK(find_structure_of_kind(g, StructureKind::S33).has_value() == (brute.s33 > 0));
        CHECK(find_structure_of_kind(g, StructureKind::S34).has_value() == (brute.s34 > 0));
    }
}

TEST_CASE("fold_structure") {
    SUBCASE("K2,3 with independent B") {
        Graph g = gen::named("k23");
        auto r = fold_structure(g, *find_structure(g));
        CHECK(r.gain == 2);
        CHECK(r.graph.vertex_count() == 1);
        CHECK(r.graph.edge_count() == 0);
        CHECK(r.gain + naive_alpha(r.graph) == 3);
    }
    SUBCASE("2-3 structure with adjacent B members") {
        Graph g = gen::named("k23");
        g.add_edge(2, 3);
        auto r = fold_structure(g, Structure{StructureKind::S23, {0, 1}, {2, 3, 4}});
        CHECK(r.graph.empty());
        CHECK(r.gain == 2);
        CHECK_FALSE(r.event.introduced);
    }
    SUBCASE("K3,4 at its 3-4 structure") {
        Graph g = gen::named("k34");
        auto r = fold_structure(g, *find_structure_of_kind(g, StructureKind::S34));
        CHECK(r.gain == 3);
        CHECK(r.graph.vertex_count() == 1);
        CHECK(r.gain + naive_alpha(r.graph) == 4);
    }
    SUBCASE("stale structure") {
        Graph g = gen::named("k23");
        CHECK_THROWS_AS(fold_structure(g, Structure{StructureKind::S23, {0, 2}, {1, 3, 4}}), InputError);
        CHECK_THROWS_AS(fold_structure(g, Structure{StructureKind::S34, {0, 1, 9}, {2, 3, 4, 5}}), InputError);
    }
}

TEST_CASE("find_bottle") {
    auto k4 = find_bottle(gen::named("k4"));
    REQUIRE(k4);
    CHECK(*k4 == Bottle{1, 0, 2, 3});
    CHECK_FALSE(find_bottle(gen::named("petersen")));

    // Diamond a,b,c,d (no bd edge) with a pendant on a: a has degree 4, so the
    // apex must be c.
    Graph g = make(5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}, {0, 4}});
    auto b = find_bottle(g);
    REQUIRE(b);
    CHECK(b->a == 2);
    CHECK(*b == Bottle{1, 2, 0, 3});
    CHECK(is_bottle(g, *b));

    auto gadget = find_bottle(gen::named("bottle-gadget"));
    REQUIRE(gadget);
    CHECK(*gadget == Bottle{11, 10, 12, 13});
}

TEST_CASE("find_4cycle") {
    auto c4 = find_4cycle(gen::named("cycle-4"));
    REQUIRE(c4);
    CHECK(*c4 == FourCycle{0, 1, 2, 3});
    CHECK_FALSE(find_4cycle(gen::named("petersen")));
    auto k4 = find_4cycle(gen::named("k4"));
    REQUIRE(k4);
    CHECK(*k4 == FourCycle{0, 1, 2, 3});
}

TEST_CASE("reduce_exhaustively") {
    SUBCASE("P5") {
        auto r = reduce_exhaustively(gen::named("path-5"));
        CHECK(r.graph.empty());
        CHECK(r.offset == 3);
    }
    SUBCASE("C5") {
        auto r = reduce_exhaustively(gen::named("cycle-5"));
        CHECK(r.graph.empty());
        CHECK(r.offset == 2);
    }
    SUBCASE("Petersen is already reduced") {
        Graph p = gen::named("petersen");
        for (VertexId v : p.vertices()) CHECK(p.degree(v) == 3);
        CHECK_FALSE(mis3::testing::brute_has_dominated(p));
        auto r = reduce_exhaustively(p);
        CHECK(r.offset == 0);
        CHECK(r.trace.empty());
        CHECK(r.graph == p);
    }
    SUBCASE("random trees vanish") {
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            gen::Rng rng(seed);
            std::size_t n = 1 + rng.below(16);
            Graph t(n);
            for (VertexId v = 1; v < n; ++v) t.add_edge(v, static_cast<VertexId>(rng.below(v)));
            auto r = reduce_exhaustively(t);
            CHECK(r.graph.empty());
            CHECK(static_cast<std::size_t>(r.offset) == naive_alpha(t));
        }
    }
}

TEST_CASE("gadget hosts carry no other reduction") {
    for (auto name : {"bottle-gadget", "s23-gadget", "s33-gadget", "s34-gadget"}) {
        CAPTURE(name);
        Graph g = gen::named(name);
        for (VertexId v : g.vertices()) CHECK(g.degree(v) >= 3);
        CHECK_FALSE(mis3::testing::brute_has_dominated(g));
    }
    CHECK(is_reduced(gen::named("bottle-gadget")));
}

TEST_CASE("reconstruct") {
    SUBCASE("P3 through a degree-2 fold") {
        auto r = fold_degree2(gen::named("path-3"), 1);
        CHECK(reconstruct({r.event}, std::vector<VertexId>{3}, r.graph) == std::vector<VertexId>{0, 2});
        CHECK(reconstruct({r.event}, std::vector<VertexId>{}, r.graph) == std::vector<VertexId>{1});
    }
    SUBCASE("single edge through a degree-1 fold") {
        auto r = fold_degree1(make(2, {{0, 1}}), 0);
        CHECK(reconstruct({r.event}, std::vector<VertexId>{}, r.graph) == std::vector<VertexId>{0});
    }
    SUBCASE("K2,3 through a 2-3 fold") {
        Graph g = gen::named("k23");
        auto r = fold_structure(g, *find_structure(g));
        auto s = reconstruct({r.event}, std::vector<VertexId>{*r.event.introduced}, r.graph);
        CHECK(s == std::vector<VertexId>{2, 3, 4});
        CHECK(is_independent_set(g, s));
    }
    SUBCASE("errors") {
        auto r = fold_degree2(gen::named("path-4"), 1);
        Graph bad = make(3, {{0, 1}});
        CHECK_THROWS_AS(reconstruct({}, std::vector<VertexId>{0, 1}, bad), InputError);
        // A vertex the trace removed cannot appear in the reduced solution.
        Graph with_removed = make(3, {});
        CHECK_THROWS_AS(reconstruct({r.event}, std::vector<VertexId>{1}, with_removed), InputError);
    }
}

namespace {

FoldResult apply_planted(RuleKind kind, const gen::Planted& p) {
    switch (kind) {
        case RuleKind::Fold1: return fold_degree1(p.graph, p.a[0]);
        case RuleKind::Fold2a:
        case RuleKind::Fold2b: return fold_degree2(p.graph, p.a[0]);
        case RuleKind::Dominance: return remove_dominated(p.graph, Domination{p.a[0], p.b[0]});
        case RuleKind::Fold23: return fold_structure(p.graph, Structure{StructureKind::S23, p.a, p.b});
        case RuleKind::Fold33: return fold_structure(p.graph, Structure{StructureKind::S33, p.a, p.b});
        default: return fold_structure(p.graph, Structure{StructureKind::S34, p.a, p.b});
    }
}

}  // namespace

TEST_CASE("property: folds preserve alpha and lift certificates") {
    const RuleKind kinds[] = {RuleKind::Fold1,     RuleKind::Fold2a, RuleKind::Fold2b, RuleKind::Dominance,
                              RuleKind::Fold23,    RuleKind::Fold33, RuleKind::Fold34};
    for (RuleKind kind : kinds) {
        for (std::uint64_t seed = 0; seed < 40; ++seed) {
            CAPTURE(rule_name(kind));
            CAPTURE(seed);
            auto p = gen::plant_rule(kind, 8 + seed % 8, seed);
            auto r = apply_planted(kind, p);
            CHECK(r.event.kind == kind);
            r.graph.check_invariants();
            auto before = oracle::brute_force_mis(p.graph);
            auto after = oracle::brute_force_mis(r.graph);
            CHECK(before.size == r.gain + after.size);
            auto lifted = reconstruct({r.event}, after.witness, r.graph);
            CHECK(lifted.size() == before.size);
            CHECK(is_independent_set(p.graph, lifted));
        }
    }
}

TEST_CASE("property: exhaustive reduction is sound, terminates, and leaves a reduced graph") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        CAPTURE(seed);
        Graph g = seed % 2 ? gen::random_bounded_degree(4 + seed % 15, 3, seed) : gen::random_gnp(4 + seed % 13, 0.3, seed);
        Graph cur = g;
        Trace trace;
        for (;;) {
            std::size_t size = cur.vertex_count() + cur.edge_count();
            if (!apply_one_reduction(cur, trace)) break;
            CHECK(cur.vertex_count() + cur.edge_count() < size);
        }
        cur.check_invariants();
        CHECK(is_reduced(cur));
        auto brute = mis3::testing::brute_structures(cur);
        CHECK(brute.s23 + brute.s33 + brute.s34 == 0);
        CHECK_FALSE(mis3::testing::brute_has_dominated(cur));

        auto reduced_mis = oracle::brute_force_mis(cur);
        auto lifted = reconstruct(trace, reduced_mis.witness, cur);
        CHECK(is_independent_set(g, lifted));
        CHECK(lifted.size() == reduced_mis.size + static_cast<std::size_t>(total_gain(trace)));
        CHECK(lifted.size() == naive_alpha(g));
    }
}

TEST_CASE("property: without degree-1/2 vertices, dominance and structure folds cut the measure by >= 4") {
    std::size_t checked = 0;
    for (std::uint64_t seed = 0; seed < 400; ++seed) {
        Graph g = seed % 2 ? gen::random_cubic(6 + 2 * (seed % 6), seed) : gen::random_bounded_degree(10 + seed % 8, 5, seed);
        Graph cur = g;
        Trace trace;
        for (;;) {
            bool low_free = true;
            for (VertexId v : cur.vertices())
                if (cur.degree(v) == 1 || cur.degree(v) == 2) low_free = false;
            long before = measure(cur);
            auto kind = apply_one_reduction(cur, trace);
            if (!kind) break;
            if (low_free && (*kind == RuleKind::Dominance || *kind == RuleKind::Fold23 || *kind == RuleKind::Fold33 ||
                             *kind == RuleKind::Fold34)) {
                ++checked;
                CHECK(before - measure(cur) >= 4);
            }
        }
    }
    CHECK(checked > 50);
}
