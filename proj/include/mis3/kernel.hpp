#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mis3/graph.hpp"

namespace mis3 {

/// Maximum-cardinality matching on an index-based bipartite graph
/// (Hopcroft-Karp). Left vertices 0..left-1, right vertices 0..right-1.
class BipartiteMatcher {
public:
    BipartiteMatcher(std::size_t left, std::size_t right);

    void add_edge(std::size_t l, std::size_t r);
    /// Runs to completion; returns the matching size.
    std::size_t solve();

    static constexpr std::size_t kFree = static_cast<std::size_t>(-1);
    std::size_t mate_of_left(std::size_t l) const { return mate_left_[l]; }
    std::size_t mate_of_right(std::size_t r) const { return mate_right_[r]; }

    /// König cover from the final matching: (left in cover, right in cover).
    std::pair<std::vector<char>, std::vector<char>> minimum_vertex_cover() const;

private:
    bool bfs();
    bool dfs(std::size_t l);

    std::vector<std::vector<std::size_t>> adj_;
    std::vector<std::size_t> mate_left_, mate_right_, level_;
    std::size_t right_;
};

/// Maximum matching of the bipartite graph g with sides `left` and `right`.
/// Throws InputError if the sides overlap, miss a vertex, or an edge has both
/// ends on one side.
std::vector<Edge> max_bipartite_matching(const Graph& g, std::span<const VertexId> left, std::span<const VertexId> right);

/// A half-integral rational stored as twice its value.
struct HalfInteger {
    long twice = 0;
    friend auto operator<=>(const HalfInteger&, const HalfInteger&) = default;
    std::string to_string() const;
};

/// Nemhauser-Trotter partition from the half-integral vertex-cover LP:
/// C0 (x = 1) is forced into some minimum cover, V0 (x = 1/2) is the kernel,
/// I0 (x = 0) is excluded.
struct Kernelization {
    std::vector<VertexId> c0, v0, i0;
    HalfInteger lp_value;
};

Kernelization nt_kernel(const Graph& g);

struct VcResult {
    bool decision = false;
    std::optional<std::vector<VertexId>> cover;
    long k = 0;
};

/// Does g have a vertex cover of size <= k? Returns a cover on yes.
VcResult vc_decide(const Graph& g, long k);

struct MvcResult {
    std::size_t size = 0;
    std::vector<VertexId> cover;
};

/// Minimum vertex cover: C0 plus the complement of a maximum independent set
/// of the kernel G(V0).
MvcResult mvc_solve(const Graph& g);

}  // namespace mis3
