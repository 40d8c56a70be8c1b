#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "mis3/graph.hpp"
#include "mis3/reduce.hpp"

namespace mis3::gen {

/// Seeded generator with platform-independent bounded draws
/// (std::uniform_int_distribution is implementation-defined).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    /// Uniform in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }
    /// Uniform in [0, 1).
    double unit();
    bool chance(double p) { return unit() < p; }

    template <typename T>
    void shuffle(std::vector<T>& xs) {
        for (std::size_t i = xs.size(); i > 1; --i) std::swap(xs[i - 1], xs[below(i)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Random simple 3-regular graph from the pairing model, rejecting pairings
/// with loops or parallel edges. n must be even and >= 4.
Graph random_cubic(std::size_t n, std::uint64_t seed);
/// As random_cubic, additionally rejecting disconnected graphs.
Graph random_connected_cubic(std::size_t n, std::uint64_t seed);
/// Random graph with maximum degree <= max_degree. The number of edge
/// attempts is drawn from [0, n * max_degree].
Graph random_bounded_degree(std::size_t n, std::size_t max_degree, std::uint64_t seed);
/// Erdős–Rényi G(n, p).
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

/// path-k, cycle-k, petersen, k4, k23, k33, k34, bottle-gadget,
/// s23-gadget, s33-gadget, s34-gadget. Unknown names throw InputError.
Graph named(std::string_view name);
std::vector<std::string_view> fixture_names();

/// A random graph with one planted instance of a rule's precondition.
/// Roles: Fold1 a={v} b={u}; Fold2a/Fold2b a={v} b={u,w};
/// Dominance a={dominated} b={dominator}; Fold23/33/34 a=A b=B
/// (Fold33: a = {v, u, w}).
struct Planted {
    Graph graph;
    std::vector<VertexId> a;
    std::vector<VertexId> b;
};

/// kind must be one of the fold/dominance kinds; n is clamped to the
/// smallest size that fits the pattern.
Planted plant_rule(RuleKind kind, std::size_t n, std::uint64_t seed);
/// Bottle b-a-{c,d} on vertices a=0, b=1, c=2, d=3.
Graph plant_bottle(std::size_t n, std::uint64_t seed);
/// 4-cycle 0-1-2-3-0, chords allowed.
Graph plant_four_cycle(std::size_t n, std::uint64_t seed);

}  // namespace mis3::gen
