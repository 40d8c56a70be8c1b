#include "mis3/oracle.hpp"

#include <bit>
#include <cstdint>
#include <string>

#include "mis3/error.hpp"

namespace mis3::oracle {

namespace {

using Mask = std::uint64_t;

struct Dense {
    std::vector<VertexId> ids;
    std::vector<Mask> adj;
};

Dense densify(const Graph& g) {
    Dense d;
    d.ids = g.vertices();
    std::vector<std::size_t> index(g.id_bound(), 0);
    for (std::size_t i = 0; i < d.ids.size(); ++i) index[d.ids[i]] = i;
    d.adj.assign(d.ids.size(), 0);
    for (std::size_t i = 0; i < d.ids.size(); ++i)
        for (VertexId u : g.neighbors(d.ids[i])) d.adj[i] |= Mask{1} << index[u];
    return d;
}

// independent[mask] derived from independent[mask minus lowest bit].
Mask enumerate_subsets(const Dense& d) {
    const std::size_t n = d.ids.size();
    const std::size_t total = std::size_t{1} << n;
    std::vector<char> independent(total, 0);
    independent[0] = 1;
    Mask best = 0;
    int best_size = 0;
    for (std::size_t mask = 1; mask < total; ++mask) {
        int low = std::countr_zero(mask);
        std::size_t rest = mask & (mask - 1);
        if (!independent[rest] || (d.adj[low] & rest)) continue;
        independent[mask] = 1;
        int size = std::popcount(mask);
        if (size > best_size) {
            best_size = size;
            best = mask;
        }
    }
    return best;
}

void branch(const Dense& d, Mask candidates, Mask chosen, Mask& best) {
    if (std::popcount(chosen) + std::popcount(candidates) <= std::popcount(best)) return;
    if (candidates == 0) {
        best = chosen;
        return;
    }
    int pick = -1;
    int pick_degree = -1;
    for (Mask rest = candidates; rest; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        int deg = std::popcount(d.adj[v] & candidates);
        if (deg > pick_degree) {
            pick = v;
            pick_degree = deg;
        }
    }
    Mask bit = Mask{1} << pick;
    if (pick_degree == 0) {
        best = chosen | candidates;
        return;
    }
    branch(d, candidates & ~bit & ~d.adj[pick], chosen | bit, best);
    branch(d, candidates & ~bit, chosen, best);
}

}  // namespace

OracleResult brute_force_mis(const Graph& g, std::size_t limit) {
    if (limit > 64) limit = 64;
    if (g.vertex_count() > limit)
        throw InputError("oracle: graph has " + std::to_string(g.vertex_count()) + " vertices, limit is " +
                         std::to_string(limit));
    Dense d = densify(g);
    Mask best = 0;
    if (d.ids.size() <= kEnumerationLimit) {
        best = enumerate_subsets(d);
    } else {
        Mask all = d.ids.size() == 64 ? ~Mask{0} : (Mask{1} << d.ids.size()) - 1;
        branch(d, all, 0, best);
    }
    OracleResult out;
    for (std::size_t i = 0; i < d.ids.size(); ++i)
        if (best >> i & 1) out.witness.push_back(d.ids[i]);
    out.size = out.witness.size();
    return out;
}

bool brute_force_vc_decide(const Graph& g, long k, std::size_t limit) {
    auto mis = brute_force_mis(g, limit);
    return static_cast<long>(g.vertex_count() - mis.size) <= k;
}

}  // namespace mis3::oracle
