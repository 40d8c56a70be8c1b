#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace mis3 {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Mutable simple undirected graph with stable vertex identifiers.
///
/// Identifiers live in [0, id_bound()). Removing a vertex retires its id;
/// add_vertex() always hands out id_bound(), so ids are never reused within
/// one graph value. Neighbor lists are kept sorted, which gives ascending
/// iteration everywhere and O(log d) adjacency tests.
class Graph {
public:
    Graph() = default;
    /// n isolated vertices with ids 0..n-1.
    explicit Graph(std::size_t n);

    std::size_t vertex_count() const { return vertex_count_; }
    std::size_t edge_count() const { return edge_count_; }
    bool empty() const { return vertex_count_ == 0; }
    /// One past the largest id ever allocated.
    VertexId id_bound() const { return static_cast<VertexId>(adjacency_.size()); }

    bool contains(VertexId v) const { return v < adjacency_.size() && alive_[v] != 0; }
    std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
    std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
    bool adjacent(VertexId u, VertexId v) const;

    /// Live vertices in ascending id order.
    std::vector<VertexId> vertices() const;
    /// Every edge once as (min, max), sorted ascending.
    std::vector<Edge> edges() const;
    std::size_t max_degree() const;

    /// Allocates a fresh isolated vertex with id == id_bound().
    VertexId add_vertex();
    /// Adds edge uv. Returns false if it already existed. A self-loop is an
    /// InternalError, unknown endpoints an InputError.
    bool add_edge(VertexId u, VertexId v);
    /// Removes v and its incident edges. Unknown id is an InputError.
    void remove_vertex(VertexId v);
    void remove_vertices(std::span<const VertexId> vs);

    /// Full-scan check of simplicity, symmetry, sortedness and counters.
    /// Throws InternalError describing the first violation.
    void check_invariants() const;

    /// Same live vertex set and same edges. id_bound() is not compared.
    friend bool operator==(const Graph& a, const Graph& b);

private:
    void require(VertexId v) const;

    std::vector<std::vector<VertexId>> adjacency_;
    std::vector<char> alive_;
    std::size_t vertex_count_ = 0;
    std::size_t edge_count_ = 0;
};

/// Simple graph on ids 0..n-1. Duplicate pairs collapse to one edge;
/// out-of-range ids and self-loops are InputErrors.
Graph build_graph(std::size_t n, std::span<const Edge> edges);

/// Induced subgraph on V(g) - removed. Ids are preserved.
Graph remove_vertices(const Graph& g, std::span<const VertexId> removed);
/// Induced subgraph on `kept`. Ids are preserved.
Graph induced_subgraph(const Graph& g, std::span<const VertexId> kept);

/// N[v] in ascending order.
std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v);
/// Vertices at distance exactly 2 from v, ascending.
std::vector<VertexId> second_neighborhood(const Graph& g, VertexId v);

/// r = sum over vertices of degree d >= 3 of (d - 2).
long measure(const Graph& g);

/// Connected components, each sorted, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const Graph& g);
bool is_connected(const Graph& g);

bool is_independent_set(const Graph& g, std::span<const VertexId> set);
bool is_vertex_cover(const Graph& g, std::span<const VertexId> set);

}  // namespace mis3
