#include "mis3/gen.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "mis3/error.hpp"

namespace mis3::gen {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw InputError("Rng::below: empty range");
    // Rejection sampling keeps draws unbiased and identical across platforms.
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

namespace {

void require_cubic_size(std::size_t n) {
    if (n < 4 || n % 2 != 0) throw InputError("cubic graph needs an even vertex count >= 4, got " + std::to_string(n));
}

Graph cubic_from(std::size_t n, Rng& rng) {
    std::vector<VertexId> points(3 * n);
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<VertexId>(i / 3);
    for (;;) {
        rng.shuffle(points);
        Graph g(n);
        bool simple = true;
        for (std::size_t i = 0; i < points.size() && simple; i += 2) {
            VertexId u = points[i], v = points[i + 1];
            simple = u != v && g.add_edge(u, v);
        }
        if (simple) return g;
    }
}

void add_random_edges(Graph& g, std::span<const VertexId> vs, double p, Rng& rng) {
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (rng.chance(p)) g.add_edge(vs[i], vs[j]);
}

// Edges between every x in xs and every y in ys with probability p.
void add_random_cross(Graph& g, std::span<const VertexId> xs, std::span<const VertexId> ys, double p, Rng& rng) {
    for (VertexId x : xs)
        for (VertexId y : ys)
            if (x != y && rng.chance(p)) g.add_edge(x, y);
}

std::vector<VertexId> range(VertexId lo, VertexId hi) {
    std::vector<VertexId> out;
    for (VertexId v = lo; v < hi; ++v) out.push_back(v);
    return out;
}

// Random subset of `pool` with at least `min_size` members.
std::vector<VertexId> random_subset(std::span<const VertexId> pool, std::size_t min_size, Rng& rng) {
    for (;;) {
        std::vector<VertexId> out;
        for (VertexId v : pool)
            if (rng.chance(0.6)) out.push_back(v);
        if (out.size() >= min_size) return out;
    }
}

void add_edges(Graph& g, std::initializer_list<Edge> edges) {
    for (auto [u, v] : edges) g.add_edge(u, v);
}

Graph petersen() {
    Graph g(10);
    for (VertexId i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, i + 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
    }
    return g;
}

// Petersen graph minus `cut` disjoint outer edges (0-1, 2-3), leaving
// 2 * cut degree-2 ports on vertices 0..2*cut-1, plus `extra` new vertices.
Graph petersen_host(int cut, std::size_t extra) {
    Graph g = petersen();
    Graph h(10 + extra);
    for (auto [u, v] : g.edges()) {
        if ((u == 0 && v == 1 && cut >= 1) || (u == 2 && v == 3 && cut >= 2)) continue;
        h.add_edge(u, v);
    }
    return h;
}

Graph complete_bipartite(std::size_t left, std::size_t right) {
    Graph g(left + right);
    for (VertexId u = 0; u < left; ++u)
        for (VertexId v = 0; v < right; ++v) g.add_edge(u, static_cast<VertexId>(left + v));
    return g;
}

std::size_t suffix_number(std::string_view name, std::string_view prefix) {
    std::string_view digits = name.substr(prefix.size());
    std::size_t k = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size())
        throw InputError("bad size in graph name '" + std::string(name) + "'");
    return k;
}

}  // namespace

Graph random_cubic(std::size_t n, std::uint64_t seed) {
    require_cubic_size(n);
    Rng rng(seed);
    return cubic_from(n, rng);
}

Graph random_connected_cubic(std::size_t n, std::uint64_t seed) {
    require_cubic_size(n);
    Rng rng(seed);
    for (;;) {
        Graph g = cubic_from(n, rng);
        if (is_connected(g)) return g;
    }
}

Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    if (n < 2) return g;
    std::uint64_t attempts = rng.below(n * max_degree + 1);
    for (std::uint64_t i = 0; i < attempts; ++i) {
        auto u = static_cast<VertexId>(rng.below(n));
        auto v = static_cast<VertexId>(rng.below(n));
        if (u == v || g.degree(u) >= max_degree || g.degree(v) >= max_degree) continue;
        g.add_edge(u, v);
    }
    return g;
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
    Rng rng(seed);
    Graph g(n);
    auto all = range(0, static_cast<VertexId>(n));
    add_random_edges(g, all, p, rng);
    return g;
}

std::vector<std::string_view> fixture_names() {
    return {"path-6",    "cycle-5",       "petersen",   "k4",         "k23",       "k33",
            "k34",       "bottle-gadget", "s23-gadget", "s33-gadget", "s34-gadget"};
}

Graph named(std::string_view name) {
    if (name.starts_with("path-")) {
        std::size_t k = suffix_number(name, "path-");
        Graph g(k);
        for (VertexId i = 0; i + 1 < k; ++i) g.add_edge(i, i + 1);
        return g;
    }
    if (name.starts_with("cycle-")) {
        std::size_t k = suffix_number(name, "cycle-");
        if (k < 3) throw InputError("cycle needs at least 3 vertices");
        Graph g(k);
        for (VertexId i = 0; i < k; ++i) g.add_edge(i, static_cast<VertexId>((i + 1) % k));
        return g;
    }
    if (name == "petersen") return petersen();
    if (name == "k4") {
        Graph g(4);
        add_edges(g, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
        return g;
    }
    if (name == "k23") return complete_bipartite(2, 3);
    if (name == "k33") return complete_bipartite(3, 3);
    if (name == "k34") return complete_bipartite(3, 4);
    if (name == "bottle-gadget") {
        // b-a-{c,d} with a=10, b=11, c=12, d=13.
        Graph g = petersen_host(2, 4);
        add_edges(g, {{10, 11}, {10, 12}, {10, 13}, {12, 13}, {12, 0}, {13, 1}, {11, 2}, {11, 3}});
        return g;
    }
    if (name == "s23-gadget") {
        // {10,11}-{12,13,14}
        Graph g = petersen_host(2, 5);
        add_edges(g, {{10, 12}, {10, 13}, {10, 14}, {11, 12}, {11, 13}, {11, 14}, {12, 0}, {13, 1}, {14, 2}, {12, 3}});
        return g;
    }
    if (name == "s33-gadget") {
        // {10,14,15}-{11,12,13}
        Graph g = petersen_host(1, 6);
        add_edges(g, {{10, 11}, {10, 12}, {10, 13}, {14, 15}, {14, 11}, {14, 12}, {15, 12}, {15, 13}, {11, 0}, {13, 1}});
        return g;
    }
    if (name == "s34-gadget") {
        // {10,11,12}-{13,14,15,16}
        Graph g = petersen_host(2, 7);
        add_edges(g, {{10, 13}, {10, 14}, {10, 15}, {11, 14}, {11, 15}, {11, 16}, {12, 13}, {12, 14}, {12, 16},
                      {13, 0}, {15, 1}, {16, 2}, {14, 3}});
        return g;
    }
    throw InputError("unknown graph name '" + std::string(name) + "'");
}

Planted plant_rule(RuleKind kind, std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    const double p = 0.15 + 0.35 * rng.unit();
    auto make = [&](std::size_t min_n) {
        n = std::max(n, min_n);
        return Graph(n);
    };
    switch (kind) {
        case RuleKind::Fold1: {
            Graph g = make(2);
            auto rest = range(1, static_cast<VertexId>(n));
            add_random_edges(g, rest, p, rng);
            g.add_edge(0, 1);
            return {std::move(g), {0}, {1}};
        }
        case RuleKind::Fold2a:
        case RuleKind::Fold2b: {
            Graph g = make(3);
            auto rest = range(1, static_cast<VertexId>(n));
            add_random_edges(g, rest, p, rng);
            bool want_edge = kind == RuleKind::Fold2a;
            if (want_edge != g.adjacent(1, 2)) {
                if (want_edge) {
                    g.add_edge(1, 2);
                } else {
                    // rebuild without the 1-2 edge
                    Graph h(n);
                    for (auto [u, v] : g.edges())
                        if (!(u == 1 && v == 2)) h.add_edge(u, v);
                    g = std::move(h);
                }
            }
            add_edges(g, {{0, 1}, {0, 2}});
            return {std::move(g), {0}, {1, 2}};
        }
        case RuleKind::Dominance: {
            Graph g = make(2);
            add_random_edges(g, range(0, static_cast<VertexId>(n)), p, rng);
            g.add_edge(0, 1);
            std::vector<VertexId> nu(g.neighbors(0).begin(), g.neighbors(0).end());
            for (VertexId x : nu)
                if (x != 1) g.add_edge(1, x);
            return {std::move(g), {1}, {0}};
        }
        case RuleKind::Fold23: {
            Graph g = make(5);
            std::vector<VertexId> a{0, 1}, b{2, 3, 4};
            auto rest = range(5, static_cast<VertexId>(n));
            for (VertexId x : a)
                for (VertexId y : b) g.add_edge(x, y);
            add_random_edges(g, b, rng.unit() * 0.5, rng);
            add_random_edges(g, rest, p, rng);
            add_random_cross(g, b, rest, p, rng);
            return {std::move(g), a, b};
        }
        case RuleKind::Fold33: {
            Graph g = make(6);
            std::vector<VertexId> b{3, 4, 5};
            auto rest = range(6, static_cast<VertexId>(n));
            for (VertexId y : b) g.add_edge(0, y);
            g.add_edge(1, 2);
            for (;;) {
                auto su = random_subset(b, 2, rng);
                auto sw = random_subset(b, 2, rng);
                std::vector<VertexId> both;
                std::set_union(su.begin(), su.end(), sw.begin(), sw.end(), std::back_inserter(both));
                if (both.size() != 3) continue;
                for (VertexId y : su) g.add_edge(1, y);
                for (VertexId y : sw) g.add_edge(2, y);
                break;
            }
            add_random_edges(g, b, rng.unit() * 0.5, rng);
            add_random_edges(g, rest, p, rng);
            add_random_cross(g, b, rest, p, rng);
            return {std::move(g), {0, 1, 2}, b};
        }
        case RuleKind::Fold34: {
            Graph g = make(7);
            std::vector<VertexId> a{0, 1, 2}, b{3, 4, 5, 6};
            auto rest = range(7, static_cast<VertexId>(n));
            for (;;) {
                std::vector<std::vector<VertexId>> picks;
                std::vector<VertexId> all;
                for (std::size_t i = 0; i < 3; ++i) {
                    picks.push_back(random_subset(b, 3, rng));
                    std::vector<VertexId> merged;
                    std::set_union(all.begin(), all.end(), picks.back().begin(), picks.back().end(),
                                   std::back_inserter(merged));
                    all = std::move(merged);
                }
                if (all.size() != 4) continue;
                for (std::size_t i = 0; i < 3; ++i)
                    for (VertexId y : picks[i]) g.add_edge(a[i], y);
                break;
            }
            add_random_edges(g, b, rng.unit() * 0.5, rng);
            add_random_edges(g, rest, p, rng);
            add_random_cross(g, b, rest, p, rng);
            return {std::move(g), a, b};
        }
        default:
            throw InputError("plant_rule: no planting for rule " + std::string(rule_name(kind)));
    }
}

Graph plant_bottle(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    n = std::max<std::size_t>(n, 4);
    const double p = 0.15 + 0.35 * rng.unit();
    Graph g(n);
    auto others = range(1, static_cast<VertexId>(n));
    add_random_edges(g, others, p, rng);
    add_edges(g, {{0, 1}, {0, 2}, {0, 3}});
    g.add_edge(2, 3);
    return g;
}

Graph plant_four_cycle(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    n = std::max<std::size_t>(n, 4);
    const double p = 0.15 + 0.35 * rng.unit();
    Graph g(n);
    add_random_edges(g, range(0, static_cast<VertexId>(n)), p, rng);
    add_edges(g, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    return g;
}

}  // namespace mis3::gen
