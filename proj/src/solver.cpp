#include "mis3/solver.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "mis3/error.hpp"
#include "mis3/reduce.hpp"

namespace mis3 {

std::string_view lemma_name(LemmaId id) {
    switch (id) {
        case LemmaId::FoldDecrease: return "fold-decrease";
        case LemmaId::BottleBranch: return "bottle-branch";
        case LemmaId::CycleBranch: return "cycle-branch";
        case LemmaId::HighDegreeBranch: return "high-degree-branch";
        case LemmaId::CubicInclude: return "cubic-include";
    }
    return "unknown";
}

std::optional<std::pair<LemmaId, long>> required_decrease(const BranchContext& ctx) {
    if (!ctx.connected || !ctx.reduced) return std::nullopt;
    switch (ctx.step) {
        case BranchStep::Bottle:
            if (ctx.vertex_count > 7) return std::pair{LemmaId::BottleBranch, 8L};
            break;
        case BranchStep::FourCycle:
            if (ctx.vertex_count > 7 && !ctx.has_bottle) return std::pair{LemmaId::CycleBranch, 8L};
            break;
        case BranchStep::MaxDegree:
            if (ctx.vertex_count <= 15 || ctx.has_bottle || ctx.has_four_cycle) break;
            if (ctx.branched_degree >= 4)
                return std::pair{LemmaId::HighDegreeBranch, ctx.side == BranchSide::First ? 14L : 6L};
            if (ctx.three_regular && ctx.side == BranchSide::First) return std::pair{LemmaId::CubicInclude, 10L};
            break;
    }
    return std::nullopt;
}

std::optional<LemmaViolation> check_branch_decrease(long parent_measure, long child_measure, const BranchContext& ctx) {
    auto req = required_decrease(ctx);
    if (!req) return std::nullopt;
    long observed = parent_measure - child_measure;
    if (observed >= req->second) return std::nullopt;
    return LemmaViolation{req->first, ctx.node, observed, req->second};
}

ComponentSolution solve_component_small(const Graph& component, std::size_t limit) {
    auto res = oracle::brute_force_mis(component, limit);
    return {res.size, std::move(res.witness)};
}

namespace {

bool has_low_degree_vertex(const Graph& g) {
    for (VertexId v : g.vertices())
        if (g.degree(v) == 1 || g.degree(v) == 2) return true;
    return false;
}

bool all_degree_three(const Graph& g) {
    for (VertexId v : g.vertices())
        if (g.degree(v) != 3) return false;
    return true;
}

class Search {
public:
    explicit Search(const SolveOptions& opts) : opts_(opts) {}

    struct Reduced {
        Graph graph;
        Trace trace;
    };

    struct Partial {
        std::size_t alpha = 0;
        std::vector<VertexId> set;
    };

    // Steps 1-5 to a fixed point.
    Reduced reduce_phase(Graph g, std::size_t node) {
        Trace trace;
        for (;;) {
            split_off_small_components(g, trace);
            bool check = opts_.assert_lemmas && !has_low_degree_vertex(g);
            long before = check ? measure(g) : 0;
            auto kind = apply_one_reduction(g, trace);
            if (!kind) break;
            ++stats_.rule_counts[std::string(rule_name(*kind))];
            if (check && *kind != RuleKind::Fold1 && *kind != RuleKind::Fold2a && *kind != RuleKind::Fold2b) {
                ++stats_.lemma_checks[std::string(lemma_name(LemmaId::FoldDecrease))];
                long observed = before - measure(g);
                if (observed < 4) stats_.lemma_violations.push_back({LemmaId::FoldDecrease, node, observed, 4});
            }
        }
        return {std::move(g), std::move(trace)};
    }

    Partial solve_reduced(const Reduced& r, std::size_t depth) {
        Partial inner;
        if (r.graph.empty()) {
            ++stats_.leaves;
        } else {
            auto comps = components(r.graph);
            if (comps.size() == 1) {
                inner = branch_connected(r.graph, depth);
            } else {
                stats_.component_splits += comps.size() - 1;
                for (const auto& comp : comps) {
                    Partial p = branch_connected(induced_subgraph(r.graph, comp), depth);
                    inner.alpha += p.alpha;
                    inner.set.insert(inner.set.end(), p.set.begin(), p.set.end());
                }
                std::sort(inner.set.begin(), inner.set.end());
            }
        }
        Partial out;
        out.alpha = inner.alpha + static_cast<std::size_t>(total_gain(r.trace));
        if (opts_.want_certificate) out.set = reconstruct(r.trace, inner.set, r.graph);
        return out;
    }

    SearchStats take_stats() { return std::move(stats_); }

private:
    struct Child {
        std::vector<VertexId> removed;
        std::optional<VertexId> include;
    };

    void split_off_small_components(Graph& g, Trace& trace) {
        if (opts_.small_component_threshold == 0) return;
        for (auto& comp : components(g)) {
            if (comp.size() > opts_.small_component_threshold) continue;
            auto sol = solve_component_small(induced_subgraph(g, comp), opts_.oracle_limit);
            g.remove_vertices(comp);
            ++stats_.rule_counts[std::string(rule_name(RuleKind::ComponentSolved))];
            trace.push_back(ReductionEvent{.kind = RuleKind::ComponentSolved,
                                           .removed = std::move(comp),
                                           .chosen = std::move(sol.set),
                                           .gain = static_cast<int>(sol.size)});
        }
    }

    // Steps 6-8 on a connected reduced graph.
    Partial branch_connected(const Graph& g, std::size_t depth) {
        const std::size_t node = ++stats_.branch_nodes;
        stats_.max_depth = std::max(stats_.max_depth, depth + 1);

        BranchContext ctx;
        ctx.node = node;
        std::vector<Child> children;
        auto bottle = find_bottle(g);
        std::optional<FourCycle> cycle;
        if (bottle) {
            ctx.step = BranchStep::Bottle;
            ++stats_.rule_counts["branch_bottle"];
            children.push_back({closed_neighborhood(g, bottle->a), bottle->a});
            children.push_back({closed_neighborhood(g, bottle->b), bottle->b});
        } else if ((cycle = find_4cycle(g))) {
            ctx.step = BranchStep::FourCycle;
            ++stats_.rule_counts["branch_4cycle"];
            children.push_back({{cycle->a, cycle->c}, std::nullopt});
            children.push_back({{cycle->b, cycle->d}, std::nullopt});
        } else {
            ctx.step = BranchStep::MaxDegree;
            ++stats_.rule_counts["branch_vertex"];
            VertexId pick = 0;
            std::size_t best = 0;
            bool found = false;
            for (VertexId v : g.vertices()) {
                if (!found || g.degree(v) > best) {
                    pick = v;
                    best = g.degree(v);
                    found = true;
                }
            }
            ctx.branched_degree = best;
            children.push_back({closed_neighborhood(g, pick), pick});
            children.push_back({{pick}, std::nullopt});
        }

        long parent_measure = 0;
        if (opts_.assert_lemmas) {
            ctx.connected = is_connected(g);
            ctx.reduced = is_reduced(g);
            ctx.vertex_count = g.vertex_count();
            ctx.three_regular = all_degree_three(g);
            ctx.has_bottle = bottle.has_value();
            ctx.has_four_cycle = cycle.has_value() || (bottle && find_4cycle(g).has_value());
            parent_measure = measure(g);
        }

        Partial best;
        bool have_best = false;
        for (std::size_t i = 0; i < children.size(); ++i) {
            const Child& child = children[i];
            Reduced red = reduce_phase(remove_vertices(g, child.removed), node);
            ReductionEvent branch_event;
            if (child.include) {
                branch_event = {.kind = RuleKind::BranchInclude, .removed = child.removed, .a_side = {*child.include}, .gain = 1};
            } else {
                branch_event = {.kind = RuleKind::BranchExclude, .removed = child.removed};
            }
            red.trace.insert(red.trace.begin(), std::move(branch_event));

            if (opts_.assert_lemmas) {
                ctx.side = i == 0 ? BranchSide::First : BranchSide::Second;
                if (auto req = required_decrease(ctx)) {
                    ++stats_.lemma_checks[std::string(lemma_name(req->first))];
                    if (auto v = check_branch_decrease(parent_measure, measure(red.graph), ctx))
                        stats_.lemma_violations.push_back(*v);
                }
            }

            Partial p = solve_reduced(red, depth + 1);
            if (!have_best || p.alpha > best.alpha) {
                best = std::move(p);
                have_best = true;
            }
        }
        return best;
    }

    const SolveOptions& opts_;
    SearchStats stats_;
};

}  // namespace

SolveResult mis_solve(const Graph& g, const SolveOptions& opts) {
    if (opts.small_component_threshold > opts.oracle_limit)
        throw InputError("small_component_threshold (" + std::to_string(opts.small_component_threshold) +
                         ") exceeds oracle_limit (" + std::to_string(opts.oracle_limit) + ")");
    Search search(opts);
    auto root = search.reduce_phase(g, 0);
    auto partial = search.solve_reduced(root, 0);
    SolveResult out;
    out.alpha = partial.alpha;
    if (opts.want_certificate) out.certificate = std::move(partial.set);
    out.stats = search.take_stats();
    return out;
}

}  // namespace mis3
