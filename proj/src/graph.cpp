#include "mis3/graph.hpp"

#include <algorithm>
#include <string>

#include "mis3/error.hpp"

namespace mis3 {

Graph::Graph(std::size_t n) : adjacency_(n), alive_(n, 1), vertex_count_(n) {}

void Graph::require(VertexId v) const {
    if (!contains(v)) throw InputError("unknown vertex id " + std::to_string(v));
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    if (!contains(u) || !contains(v)) return false;
    const auto& small = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
    VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
    return std::binary_search(small.begin(), small.end(), other);
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(vertex_count_);
    for (VertexId v = 0; v < id_bound(); ++v)
        if (alive_[v]) out.push_back(v);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (VertexId u = 0; u < id_bound(); ++u) {
        if (!alive_[u]) continue;
        for (VertexId v : adjacency_[u])
            if (u < v) out.emplace_back(u, v);
    }
    return out;
}

std::size_t Graph::max_degree() const {
    std::size_t best = 0;
    for (VertexId v = 0; v < id_bound(); ++v)
        if (alive_[v]) best = std::max(best, adjacency_[v].size());
    return best;
}

VertexId Graph::add_vertex() {
    adjacency_.emplace_back();
    alive_.push_back(1);
    ++vertex_count_;
    return id_bound() - 1;
}

bool Graph::add_edge(VertexId u, VertexId v) {
    require(u);
    require(v);
    if (u == v) throw InternalError("self-loop on vertex " + std::to_string(u));
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) return false;
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
    return true;
}

void Graph::remove_vertex(VertexId v) {
    require(v);
    for (VertexId u : adjacency_[v]) {
        auto& nu = adjacency_[u];
        nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    }
    edge_count_ -= adjacency_[v].size();
    adjacency_[v].clear();
    adjacency_[v].shrink_to_fit();
    alive_[v] = 0;
    --vertex_count_;
}

void Graph::remove_vertices(std::span<const VertexId> vs) {
    for (VertexId v : vs) require(v);
    for (VertexId v : vs)
        if (contains(v)) remove_vertex(v);
}

void Graph::check_invariants() const {
    std::size_t live = 0;
    std::size_t degree_sum = 0;
    for (VertexId v = 0; v < id_bound(); ++v) {
        const auto& nv = adjacency_[v];
        if (!alive_[v]) {
            if (!nv.empty()) throw InternalError("removed vertex " + std::to_string(v) + " has neighbors");
            continue;
        }
        ++live;
        degree_sum += nv.size();
        for (std::size_t i = 0; i < nv.size(); ++i) {
            VertexId u = nv[i];
            if (u == v) throw InternalError("self-loop on " + std::to_string(v));
            if (i > 0 && nv[i - 1] >= u) throw InternalError("neighbor list of " + std::to_string(v) + " not strictly sorted");
            if (!contains(u)) throw InternalError("edge to removed vertex " + std::to_string(u));
            const auto& back = adjacency_[u];
            if (!std::binary_search(back.begin(), back.end(), v))
                throw InternalError("asymmetric edge " + std::to_string(v) + "-" + std::to_string(u));
        }
    }
    if (live != vertex_count_) throw InternalError("vertex counter out of sync");
    if (degree_sum != 2 * edge_count_) throw InternalError("edge counter out of sync");
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.vertex_count_ != b.vertex_count_ || a.edge_count_ != b.edge_count_) return false;
    VertexId bound = std::max(a.id_bound(), b.id_bound());
    for (VertexId v = 0; v < bound; ++v) {
        if (a.contains(v) != b.contains(v)) return false;
        if (a.contains(v) && a.adjacency_[v] != b.adjacency_[v]) return false;
    }
    return true;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n)
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) + ") out of range for n=" +
                             std::to_string(n));
        if (u == v) throw InputError("self-loop on vertex " + std::to_string(u));
        g.add_edge(u, v);
    }
    return g;
}

Graph remove_vertices(const Graph& g, std::span<const VertexId> removed) {
    Graph out = g;
    out.remove_vertices(removed);
    return out;
}

Graph induced_subgraph(const Graph& g, std::span<const VertexId> kept) {
    std::vector<char> keep(g.id_bound(), 0);
    for (VertexId v : kept) {
        if (!g.contains(v)) throw InputError("unknown vertex id " + std::to_string(v));
        keep[v] = 1;
    }
    std::vector<VertexId> drop;
    for (VertexId v : g.vertices())
        if (!keep[v]) drop.push_back(v);
    return remove_vertices(g, drop);
}

std::vector<VertexId> closed_neighborhood(const Graph& g, VertexId v) {
    if (!g.contains(v)) throw InputError("unknown vertex id " + std::to_string(v));
    auto nv = g.neighbors(v);
    std::vector<VertexId> out(nv.begin(), nv.end());
    out.insert(std::lower_bound(out.begin(), out.end(), v), v);
    return out;
}

std::vector<VertexId> second_neighborhood(const Graph& g, VertexId v) {
    auto closed = closed_neighborhood(g, v);
    std::vector<VertexId> out;
    for (VertexId u : g.neighbors(v))
        for (VertexId w : g.neighbors(u))
            if (!std::binary_search(closed.begin(), closed.end(), w)) out.push_back(w);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

long measure(const Graph& g) {
    long r = 0;
    for (VertexId v = 0; v < g.id_bound(); ++v)
        if (g.contains(v) && g.degree(v) >= 3) r += static_cast<long>(g.degree(v)) - 2;
    return r;
}

std::vector<std::vector<VertexId>> components(const Graph& g) {
    std::vector<std::vector<VertexId>> out;
    std::vector<char> seen(g.id_bound(), 0);
    std::vector<VertexId> stack;
    for (VertexId s : g.vertices()) {
        if (seen[s]) continue;
        std::vector<VertexId> comp;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            for (VertexId u : g.neighbors(v)) {
                if (seen[u]) continue;
                seen[u] = 1;
                stack.push_back(u);
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_independent_set(const Graph& g, std::span<const VertexId> set) {
    std::vector<char> in(g.id_bound(), 0);
    for (VertexId v : set) {
        if (!g.contains(v) || in[v]) return false;
        in[v] = 1;
    }
    for (VertexId v : set)
        for (VertexId u : g.neighbors(v))
            if (in[u]) return false;
    return true;
}

bool is_vertex_cover(const Graph& g, std::span<const VertexId> set) {
    std::vector<char> in(g.id_bound(), 0);
    for (VertexId v : set) {
        if (!g.contains(v) || in[v]) return false;
        in[v] = 1;
    }
    for (auto [u, v] : g.edges())
        if (!in[u] && !in[v]) return false;
    return true;
}

}  // namespace mis3
