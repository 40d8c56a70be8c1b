#include "mis3/reduce.hpp"

#include <algorithm>
#include <string>

#include "mis3/error.hpp"

namespace mis3 {

namespace {

std::vector<VertexId> sorted_union(std::span<const VertexId> x, std::span<const VertexId> y) {
    std::vector<VertexId> out;
    out.reserve(x.size() + y.size());
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
    return out;
}

bool contains_sorted(std::span<const VertexId> xs, VertexId v) { return std::binary_search(xs.begin(), xs.end(), v); }

bool pairwise_nonadjacent(const Graph& g, std::span<const VertexId> xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (g.adjacent(xs[i], xs[j])) return false;
    return true;
}

bool all_present_and_distinct(const Graph& g, std::vector<VertexId> xs) {
    for (VertexId v : xs)
        if (!g.contains(v)) return false;
    std::sort(xs.begin(), xs.end());
    return std::adjacent_find(xs.begin(), xs.end()) == xs.end();
}

std::vector<VertexId> neighbor_vector(const Graph& g, VertexId v) {
    auto n = g.neighbors(v);
    return {n.begin(), n.end()};
}

// N(u) ∪ N(w) - {u, w} == target (target sorted)
bool pair_neighborhood_equals(const Graph& g, VertexId u, VertexId w, std::span<const VertexId> target) {
    auto merged = sorted_union(g.neighbors(u), g.neighbors(w));
    std::erase_if(merged, [&](VertexId x) { return x == u || x == w; });
    return std::equal(merged.begin(), merged.end(), target.begin(), target.end());
}

std::optional<Structure> find_s23(const Graph& g) {
    for (VertexId u : g.vertices()) {
        if (g.degree(u) != 3) continue;
        std::optional<VertexId> best;
        for (VertexId a : g.neighbors(u)) {
            for (VertexId v : g.neighbors(a)) {
                if (v <= u || g.degree(v) != 3 || (best && v >= *best)) continue;
                if (std::ranges::equal(g.neighbors(u), g.neighbors(v))) best = v;
            }
        }
        if (best) return Structure{StructureKind::S23, {u, *best}, neighbor_vector(g, u)};
    }
    return std::nullopt;
}

std::optional<Structure> find_s33(const Graph& g) {
    for (VertexId v : g.vertices()) {
        if (g.degree(v) != 3) continue;
        auto b = g.neighbors(v);
        std::optional<std::pair<VertexId, VertexId>> best;
        for (VertexId x : b) {
            for (VertexId u : g.neighbors(x)) {
                if (u == v || g.degree(u) < 3 || contains_sorted(b, u)) continue;
                for (VertexId w : g.neighbors(u)) {
                    if (w <= u || w == v || g.degree(w) < 3 || contains_sorted(b, w)) continue;
                    std::pair<VertexId, VertexId> cand{u, w};
                    if (best && cand >= *best) continue;
                    if (pair_neighborhood_equals(g, u, w, b)) best = cand;
                }
            }
        }
        if (best) return Structure{StructureKind::S33, {v, best->first, best->second}, neighbor_vector(g, v)};
    }
    return std::nullopt;
}

std::optional<Structure> find_s34(const Graph& g) {
    for (VertexId u : g.vertices()) {
        if (g.degree(u) < 3 || g.degree(u) > 4) continue;
        std::vector<VertexId> candidates;
        for (VertexId x : second_neighborhood(g, u)) {
            if (x <= u || g.degree(x) < 3 || g.degree(x) > 4) continue;
            if (sorted_union(g.neighbors(u), g.neighbors(x)).size() <= 4) candidates.push_back(x);
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            VertexId v = candidates[i];
            auto uv = sorted_union(g.neighbors(u), g.neighbors(v));
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                VertexId w = candidates[j];
                if (g.adjacent(v, w)) continue;
                auto all = sorted_union(uv, g.neighbors(w));
                if (all.size() == 4) return Structure{StructureKind::S34, {u, v, w}, all};
            }
        }
    }
    return std::nullopt;
}

int structure_gain(StructureKind kind) { return kind == StructureKind::S34 ? 3 : 2; }

RuleKind structure_rule(StructureKind kind) {
    switch (kind) {
        case StructureKind::S23: return RuleKind::Fold23;
        case StructureKind::S33: return RuleKind::Fold33;
        case StructureKind::S34: return RuleKind::Fold34;
    }
    return RuleKind::Fold23;
}

template <typename InPlace, typename Arg>
FoldResult run_pure(const Graph& g, InPlace op, const Arg& arg) {
    FoldResult out{g, 0, {}};
    out.event = op(out.graph, arg);
    out.gain = out.event.gain;
    return out;
}

}  // namespace

std::string_view rule_name(RuleKind kind) {
    switch (kind) {
        case RuleKind::Fold1: return "fold1";
        case RuleKind::Fold2a: return "fold2a";
        case RuleKind::Fold2b: return "fold2b";
        case RuleKind::Dominance: return "dominance";
        case RuleKind::Fold23: return "fold23";
        case RuleKind::Fold33: return "fold33";
        case RuleKind::Fold34: return "fold34";
        case RuleKind::ComponentSolved: return "component_solved";
        case RuleKind::BranchInclude: return "branch_include";
        case RuleKind::BranchExclude: return "branch_exclude";
    }
    return "unknown";
}

ReductionEvent take_isolated_in_place(Graph& g, VertexId v) {
    if (!g.contains(v) || g.degree(v) != 0) throw InputError("take_isolated: vertex " + std::to_string(v) + " is not isolated");
    g.remove_vertex(v);
    return ReductionEvent{.kind = RuleKind::Fold1, .removed = {v}, .a_side = {v}, .gain = 1};
}

ReductionEvent fold_degree1_in_place(Graph& g, VertexId v) {
    if (!g.contains(v) || g.degree(v) != 1) throw InputError("fold_degree1: vertex " + std::to_string(v) + " does not have degree 1");
    VertexId u = g.neighbors(v)[0];
    g.remove_vertex(v);
    g.remove_vertex(u);
    return ReductionEvent{.kind = RuleKind::Fold1, .removed = {v, u}, .a_side = {v}, .b_side = {u}, .gain = 1};
}

ReductionEvent fold_degree2_in_place(Graph& g, VertexId v) {
    if (!g.contains(v) || g.degree(v) != 2) throw InputError("fold_degree2: vertex " + std::to_string(v) + " does not have degree 2");
    VertexId u = g.neighbors(v)[0];
    VertexId w = g.neighbors(v)[1];
    if (g.adjacent(u, w)) {
        g.remove_vertices(std::vector<VertexId>{v, u, w});
        return ReductionEvent{.kind = RuleKind::Fold2a, .removed = {v, u, w}, .a_side = {v}, .b_side = {u, w}, .gain = 1};
    }
    auto outside = sorted_union(g.neighbors(u), g.neighbors(w));
    std::erase(outside, v);
    g.remove_vertices(std::vector<VertexId>{v, u, w});
    VertexId s = g.add_vertex();
    for (VertexId x : outside) g.add_edge(s, x);
    return ReductionEvent{
        .kind = RuleKind::Fold2b, .removed = {v, u, w}, .introduced = s, .a_side = {v}, .b_side = {u, w}, .gain = 1};
}

ReductionEvent remove_dominated_in_place(Graph& g, Domination d) {
    if (!g.contains(d.dominated) || !g.contains(d.dominator) || d.dominated == d.dominator ||
        !g.adjacent(d.dominated, d.dominator))
        throw InputError("remove_dominated: stale domination pair");
    auto nu = closed_neighborhood(g, d.dominator);
    auto nv = closed_neighborhood(g, d.dominated);
    if (!std::includes(nv.begin(), nv.end(), nu.begin(), nu.end()))
        throw InputError("remove_dominated: N[u] is not contained in N[v]");
    g.remove_vertex(d.dominated);
    return ReductionEvent{.kind = RuleKind::Dominance,
                          .removed = {d.dominated},
                          .a_side = {d.dominated},
                          .b_side = {d.dominator},
                          .gain = 0};
}

ReductionEvent fold_structure_in_place(Graph& g, const Structure& s) {
    if (!is_valid_structure(g, s)) throw InputError("fold_structure: structure is not valid in this graph");
    std::vector<VertexId> removed = s.a;
    removed.insert(removed.end(), s.b.begin(), s.b.end());
    ReductionEvent ev{
        .kind = structure_rule(s.kind), .removed = removed, .a_side = s.a, .b_side = s.b, .gain = structure_gain(s.kind)};
    if (!pairwise_nonadjacent(g, s.b)) {
        g.remove_vertices(removed);
        return ev;
    }
    std::vector<VertexId> outside;
    for (VertexId x : s.b)
        for (VertexId y : g.neighbors(x))
            if (std::find(removed.begin(), removed.end(), y) == removed.end()) outside.push_back(y);
    std::sort(outside.begin(), outside.end());
    outside.erase(std::unique(outside.begin(), outside.end()), outside.end());
    g.remove_vertices(removed);
    VertexId fresh = g.add_vertex();
    for (VertexId y : outside) g.add_edge(fresh, y);
    ev.introduced = fresh;
    return ev;
}

FoldResult fold_degree1(const Graph& g, VertexId v) { return run_pure(g, fold_degree1_in_place, v); }
FoldResult fold_degree2(const Graph& g, VertexId v) { return run_pure(g, fold_degree2_in_place, v); }
FoldResult take_isolated(const Graph& g, VertexId v) { return run_pure(g, take_isolated_in_place, v); }
FoldResult remove_dominated(const Graph& g, Domination d) { return run_pure(g, remove_dominated_in_place, d); }
FoldResult fold_structure(const Graph& g, const Structure& s) { return run_pure(g, fold_structure_in_place, s); }

std::optional<Domination> find_dominated(const Graph& g) {
    for (VertexId u : g.vertices()) {
        auto nu = g.neighbors(u);
        for (VertexId v : nu) {
            if (g.degree(v) < g.degree(u)) continue;
            auto nv = g.neighbors(v);
            bool subset = std::all_of(nu.begin(), nu.end(), [&](VertexId x) { return x == v || contains_sorted(nv, x); });
            if (subset) return Domination{v, u};
        }
    }
    return std::nullopt;
}

bool is_valid_structure(const Graph& g, const Structure& s) {
    std::vector<VertexId> all = s.a;
    all.insert(all.end(), s.b.begin(), s.b.end());
    if (!all_present_and_distinct(g, all)) return false;
    std::vector<VertexId> b = s.b;
    std::sort(b.begin(), b.end());
    switch (s.kind) {
        case StructureKind::S23:
            if (s.a.size() != 2 || b.size() != 3) return false;
            if (g.adjacent(s.a[0], s.a[1])) return false;
            return std::ranges::equal(g.neighbors(s.a[0]), b) && std::ranges::equal(g.neighbors(s.a[1]), b);
        case StructureKind::S33: {
            if (s.a.size() != 3 || b.size() != 3) return false;
            VertexId v = s.a[0], u = s.a[1], w = s.a[2];
            if (!std::ranges::equal(g.neighbors(v), b)) return false;
            if (!g.adjacent(u, w) || g.degree(u) < 3 || g.degree(w) < 3) return false;
            return pair_neighborhood_equals(g, u, w, b);
        }
        case StructureKind::S34: {
            if (s.a.size() != 3 || b.size() != 4) return false;
            if (!pairwise_nonadjacent(g, s.a)) return false;
            std::vector<VertexId> acc;
            for (VertexId x : s.a) {
                if (g.degree(x) < 3) return false;
                acc = sorted_union(acc, g.neighbors(x));
            }
            return acc == b;
        }
    }
    return false;
}

std::optional<Structure> find_structure_of_kind(const Graph& g, StructureKind kind) {
    switch (kind) {
        case StructureKind::S23: return find_s23(g);
        case StructureKind::S33: return find_s33(g);
        case StructureKind::S34: return find_s34(g);
    }
    return std::nullopt;
}

std::optional<Structure> find_structure(const Graph& g) {
    if (auto s = find_s23(g)) return s;
    if (auto s = find_s33(g)) return s;
    return find_s34(g);
}

bool is_bottle(const Graph& g, const Bottle& x) {
    if (!all_present_and_distinct(g, {x.a, x.b, x.c, x.d})) return false;
    return g.degree(x.a) == 3 && g.adjacent(x.a, x.b) && g.adjacent(x.a, x.c) && g.adjacent(x.a, x.d) &&
           g.adjacent(x.c, x.d);
}

std::optional<Bottle> find_bottle(const Graph& g) {
    for (VertexId a : g.vertices()) {
        if (g.degree(a) != 3) continue;
        auto n = g.neighbors(a);
        for (int i = 0; i < 3; ++i) {
            VertexId c = n[(i + 1) % 3], d = n[(i + 2) % 3];
            if (g.adjacent(c, d)) return Bottle{n[i], a, std::min(c, d), std::max(c, d)};
        }
    }
    return std::nullopt;
}

std::optional<FourCycle> find_4cycle(const Graph& g) {
    for (VertexId a : g.vertices())
        for (VertexId b : g.neighbors(a))
            for (VertexId c : g.neighbors(b)) {
                if (c == a) continue;
                for (VertexId d : g.neighbors(c))
                    if (d != a && d != b && g.adjacent(d, a)) return FourCycle{a, b, c, d};
            }
    return std::nullopt;
}

std::optional<RuleKind> apply_one_reduction(Graph& g, Trace& trace) {
    std::optional<VertexId> low[3];
    for (VertexId v : g.vertices()) {
        std::size_t d = g.degree(v);
        if (d <= 2 && !low[d]) low[d] = v;
        if (low[0]) break;
    }
    if (low[0]) {
        trace.push_back(take_isolated_in_place(g, *low[0]));
    } else if (low[1]) {
        trace.push_back(fold_degree1_in_place(g, *low[1]));
    } else if (low[2]) {
        trace.push_back(fold_degree2_in_place(g, *low[2]));
    } else if (auto d = find_dominated(g)) {
        trace.push_back(remove_dominated_in_place(g, *d));
    } else if (auto s = find_structure(g)) {
        trace.push_back(fold_structure_in_place(g, *s));
    } else {
        return std::nullopt;
    }
    return trace.back().kind;
}

ReduceOutcome reduce_exhaustively(const Graph& g) {
    ReduceOutcome out{g, 0, {}};
    while (apply_one_reduction(out.graph, out.trace)) {
    }
    out.offset = total_gain(out.trace);
    return out;
}

bool is_reduced(const Graph& g, bool allow_isolated) {
    for (VertexId v : g.vertices()) {
        std::size_t d = g.degree(v);
        if (d == 0 && !allow_isolated) return false;
        if (d == 1 || d == 2) return false;
    }
    return !find_dominated(g) && !find_structure(g);
}

int total_gain(const Trace& trace) {
    int sum = 0;
    for (const auto& ev : trace) sum += ev.gain;
    return sum;
}

std::vector<VertexId> reconstruct(const Trace& trace, std::span<const VertexId> reduced_set, const Graph& reduced) {
    if (!is_independent_set(reduced, reduced_set)) throw InputError("reconstruct: set is not independent in the reduced graph");

    VertexId bound = reduced.id_bound();
    auto widen = [&](std::span<const VertexId> xs) {
        for (VertexId x : xs) bound = std::max(bound, x + 1);
    };
    for (const auto& ev : trace) {
        widen(ev.removed);
        widen(ev.a_side);
        widen(ev.b_side);
        widen(ev.chosen);
        if (ev.introduced) bound = std::max(bound, *ev.introduced + 1);
    }

    std::vector<char> in(bound, 0);
    for (VertexId v : reduced_set) in[v] = 1;

    for (auto it = trace.rbegin(); it != trace.rend(); ++it) {
        const ReductionEvent& ev = *it;
        for (VertexId r : ev.removed)
            if (in[r]) throw InputError("reconstruct: trace does not match graph (vertex " + std::to_string(r) + ")");
        bool took_fresh = ev.introduced && in[*ev.introduced];
        if (took_fresh) in[*ev.introduced] = 0;
        auto add = [&](std::span<const VertexId> xs) {
            for (VertexId x : xs) in[x] = 1;
        };
        switch (ev.kind) {
            case RuleKind::Fold1:
            case RuleKind::Fold2a:
                add(ev.a_side);
                break;
            case RuleKind::Fold2b:
            case RuleKind::Fold23:
            case RuleKind::Fold34:
                add(took_fresh ? ev.b_side : ev.a_side);
                break;
            case RuleKind::Fold33:
                if (took_fresh) {
                    add(ev.b_side);
                } else {
                    in[ev.a_side[0]] = 1;
                    in[std::min(ev.a_side[1], ev.a_side[2])] = 1;
                }
                break;
            case RuleKind::ComponentSolved:
                add(ev.chosen);
                break;
            case RuleKind::BranchInclude:
                add(ev.a_side);
                break;
            case RuleKind::Dominance:
            case RuleKind::BranchExclude:
                break;
        }
    }

    std::vector<VertexId> out;
    for (VertexId v = 0; v < bound; ++v)
        if (in[v]) out.push_back(v);
    return out;
}

}  // namespace mis3
