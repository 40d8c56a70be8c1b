#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mis3/graph.hpp"
#include "mis3/oracle.hpp"

namespace mis3 {

struct SolveOptions {
    bool want_certificate = true;
    bool assert_lemmas = false;
    // Components with at most this many vertices go to the oracle.
    std::size_t small_component_threshold = 15;
    std::size_t oracle_limit = oracle::kDefaultLimit;
};

/// Measure-decrease bounds checked at branch edges in assert mode.
enum class LemmaId {
    FoldDecrease,      // dominance or structure fold without degree-1/2 vertices: >= 4
    BottleBranch,      // bottle, connected reduced, > 7 vertices: >= 8 per branch
    CycleBranch,       // 4-cycle, additionally bottle-free: >= 8 per branch
    HighDegreeBranch,  // max-degree vertex of degree >= 4, > 15 vertices, no bottle/4-cycle: 6 exclude, 14 include
    CubicInclude,      // same but 3-regular: >= 10 on the include branch
};

std::string_view lemma_name(LemmaId id);

struct LemmaViolation {
    LemmaId lemma{};
    std::size_t node = 0;
    long observed = 0;
    long required = 0;
    friend bool operator==(const LemmaViolation&, const LemmaViolation&) = default;
};

struct SearchStats {
    std::size_t branch_nodes = 0;
    std::size_t leaves = 0;
    // Extra children created by splitting a disconnected reduced graph into
    // independently solved components: leaves == branch_nodes + 1 + component_splits.
    std::size_t component_splits = 0;
    std::size_t max_depth = 0;
    std::map<std::string, std::size_t> rule_counts;
    std::map<std::string, std::size_t> lemma_checks;
    std::vector<LemmaViolation> lemma_violations;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct SolveResult {
    std::size_t alpha = 0;
    std::optional<std::vector<VertexId>> certificate;
    SearchStats stats;
};

/// Exact maximum independent set by branch and reduce.
SolveResult mis_solve(const Graph& g, const SolveOptions& opts = {});

enum class BranchStep { Bottle, FourCycle, MaxDegree };
enum class BranchSide { First, Second };

/// Facts about the component at a branch node, used to decide which
/// measure-decrease bound applies.
struct BranchContext {
    BranchStep step{};
    // Bottle/4-cycle: First = first-explored branch. MaxDegree: First = include v, Second = exclude v.
    BranchSide side{};
    std::size_t node = 0;
    bool connected = false;
    bool reduced = false;
    std::size_t vertex_count = 0;
    std::size_t branched_degree = 0;  // MaxDegree only
    bool three_regular = false;
    bool has_bottle = false;
    bool has_four_cycle = false;
};

/// Checks parent_measure - child_measure against the bound that applies to
/// ctx. Returns nullopt if the bound holds or no bound applies.
std::optional<LemmaViolation> check_branch_decrease(long parent_measure, long child_measure, const BranchContext& ctx);

/// The bound check_branch_decrease would enforce, if any.
std::optional<std::pair<LemmaId, long>> required_decrease(const BranchContext& ctx);

struct ComponentSolution {
    std::size_t size = 0;
    std::vector<VertexId> set;
};

/// Oracle solve of a small component. Throws InputError above `limit`.
ComponentSolution solve_component_small(const Graph& component, std::size_t limit = oracle::kDefaultLimit);

}  // namespace mis3
