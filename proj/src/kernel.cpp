#include "mis3/kernel.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include "mis3/error.hpp"
#include "mis3/solver.hpp"

namespace mis3 {

namespace {
constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
}

BipartiteMatcher::BipartiteMatcher(std::size_t left, std::size_t right)
    : adj_(left), mate_left_(left, kFree), mate_right_(right, kFree), level_(left, kInf), right_(right) {}

void BipartiteMatcher::add_edge(std::size_t l, std::size_t r) {
    if (l >= adj_.size() || r >= right_) throw InputError("bipartite edge out of range");
    adj_[l].push_back(r);
}

bool BipartiteMatcher::bfs() {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t l = 0; l < adj_.size(); ++l) {
        if (mate_left_[l] == kFree) {
            level_[l] = 0;
            q.push(l);
        } else {
            level_[l] = kInf;
        }
    }
    while (!q.empty()) {
        std::size_t l = q.front();
        q.pop();
        for (std::size_t r : adj_[l]) {
            std::size_t next = mate_right_[r];
            if (next == kFree) {
                reachable_free = true;
            } else if (level_[next] == kInf) {
                level_[next] = level_[l] + 1;
                q.push(next);
            }
        }
    }
    return reachable_free;
}

bool BipartiteMatcher::dfs(std::size_t l) {
    for (std::size_t r : adj_[l]) {
        std::size_t next = mate_right_[r];
        if (next == kFree || (level_[next] == level_[l] + 1 && dfs(next))) {
            mate_left_[l] = r;
            mate_right_[r] = l;
            return true;
        }
    }
    level_[l] = kInf;
    return false;
}

std::size_t BipartiteMatcher::solve() {
    for (auto& nbrs : adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
    }
    while (bfs())
        for (std::size_t l = 0; l < adj_.size(); ++l)
            if (mate_left_[l] == kFree) dfs(l);
    std::size_t size = 0;
    for (std::size_t m : mate_left_)
        if (m != kFree) ++size;
    return size;
}

std::pair<std::vector<char>, std::vector<char>> BipartiteMatcher::minimum_vertex_cover() const {
    // Z = vertices reachable from free left vertices by alternating paths;
    // cover = (L \ Z) ∪ (R ∩ Z).
    std::vector<char> left_z(adj_.size(), 0), right_z(right_, 0);
    std::queue<std::size_t> q;
    for (std::size_t l = 0; l < adj_.size(); ++l)
        if (mate_left_[l] == kFree) {
            left_z[l] = 1;
            q.push(l);
        }
    while (!q.empty()) {
        std::size_t l = q.front();
        q.pop();
        for (std::size_t r : adj_[l]) {
            if (right_z[r] || mate_left_[l] == r) continue;
            right_z[r] = 1;
            std::size_t next = mate_right_[r];
            if (next != kFree && !left_z[next]) {
                left_z[next] = 1;
                q.push(next);
            }
        }
    }
    std::vector<char> left_cover(adj_.size()), right_cover(right_);
    for (std::size_t l = 0; l < adj_.size(); ++l) left_cover[l] = !left_z[l];
    for (std::size_t r = 0; r < right_; ++r) right_cover[r] = right_z[r];
    return {std::move(left_cover), std::move(right_cover)};
}

std::vector<Edge> max_bipartite_matching(const Graph& g, std::span<const VertexId> left, std::span<const VertexId> right) {
    std::vector<int> side(g.id_bound(), -1);
    std::vector<std::size_t> index(g.id_bound(), 0);
    auto assign = [&](std::span<const VertexId> part, int tag) {
        for (std::size_t i = 0; i < part.size(); ++i) {
            VertexId v = part[i];
            if (!g.contains(v)) throw InputError("bipartite side names unknown vertex " + std::to_string(v));
            if (side[v] != -1) throw InputError("bipartite sides are not disjoint at vertex " + std::to_string(v));
            side[v] = tag;
            index[v] = i;
        }
    };
    assign(left, 0);
    assign(right, 1);
    for (VertexId v : g.vertices())
        if (side[v] == -1) throw InputError("vertex " + std::to_string(v) + " is on neither side");

    BipartiteMatcher m(left.size(), right.size());
    for (auto [u, v] : g.edges()) {
        if (side[u] == side[v])
            throw InputError("edge " + std::to_string(u) + "-" + std::to_string(v) + " lies within one side");
        if (side[u] == 0)
            m.add_edge(index[u], index[v]);
        else
            m.add_edge(index[v], index[u]);
    }
    m.solve();
    std::vector<Edge> out;
    for (std::size_t l = 0; l < left.size(); ++l)
        if (m.mate_of_left(l) != BipartiteMatcher::kFree) out.emplace_back(left[l], right[m.mate_of_left(l)]);
    return out;
}

std::string HalfInteger::to_string() const {
    std::string s = std::to_string(twice / 2);
    if (twice % 2 != 0) s += ".5";
    return s;
}

Kernelization nt_kernel(const Graph& g) {
    // Bipartite double cover: v -> (vL, vR), uv -> uL-vR and vL-uR.
    auto ids = g.vertices();
    std::vector<std::size_t> index(g.id_bound(), 0);
    for (std::size_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;

    BipartiteMatcher m(ids.size(), ids.size());
    for (auto [u, v] : g.edges()) {
        m.add_edge(index[u], index[v]);
        m.add_edge(index[v], index[u]);
    }
    m.solve();
    auto [left_cover, right_cover] = m.minimum_vertex_cover();

    Kernelization k;
    for (std::size_t i = 0; i < ids.size(); ++i) {
        int halves = left_cover[i] + right_cover[i];
        if (halves == 2)
            k.c0.push_back(ids[i]);
        else if (halves == 1)
            k.v0.push_back(ids[i]);
        else
            k.i0.push_back(ids[i]);
    }
    k.lp_value.twice = 2 * static_cast<long>(k.c0.size()) + static_cast<long>(k.v0.size());
    return k;
}

namespace {

std::vector<VertexId> cover_from_kernel(const Graph& g, const Kernelization& k) {
    Graph kernel = induced_subgraph(g, k.v0);
    SolveOptions opts;
    opts.want_certificate = true;
    auto res = mis_solve(kernel, opts);
    std::vector<VertexId> cover = k.c0;
    std::vector<VertexId> independent = *res.certificate;
    std::set_difference(k.v0.begin(), k.v0.end(), independent.begin(), independent.end(), std::back_inserter(cover));
    std::sort(cover.begin(), cover.end());
    return cover;
}

}  // namespace

VcResult vc_decide(const Graph& g, long k) {
    if (k < 0) throw InputError("k must be non-negative");
    VcResult out;
    out.k = k;
    Kernelization kern = nt_kernel(g);
    if (static_cast<long>(kern.v0.size()) > 2 * k) return out;
    if (kern.lp_value.twice > 2 * k) return out;
    auto cover = cover_from_kernel(g, kern);
    if (static_cast<long>(cover.size()) > k) return out;
    out.decision = true;
    out.cover = std::move(cover);
    return out;
}

MvcResult mvc_solve(const Graph& g) {
    auto cover = cover_from_kernel(g, nt_kernel(g));
    if (!is_vertex_cover(g, cover)) throw InternalError("mvc_solve produced a set that is not a vertex cover");
    return {cover.size(), std::move(cover)};
}

}  // namespace mis3
