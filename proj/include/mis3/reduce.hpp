#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mis3/graph.hpp"

namespace mis3 {

enum class RuleKind {
    Fold1,  // also used for taking an isolated vertex (b_side empty)
    Fold2a,
    Fold2b,
    Dominance,
    Fold23,
    Fold33,
    Fold34,
    ComponentSolved,
    BranchInclude,
    BranchExclude,
};

std::string_view rule_name(RuleKind kind);

/// One applied reduction, with enough data to lift an independent set of
/// the graph after the event back to the graph before it.
///
/// Role layout per kind:
///   Fold1           a_side = {v}, b_side = {u} (empty when v was isolated)
///   Fold2a/Fold2b   a_side = {v}, b_side = {u, w}
///   Dominance       a_side = {dominated v}, b_side = {dominator u}
///   Fold23/Fold34   a_side = A, b_side = B
///   Fold33          a_side = {v, u, w}, b_side = N(v)
///   ComponentSolved chosen = independent set picked in the removed component
///   BranchInclude   a_side = included vertices
///   BranchExclude   removed = excluded vertices
struct ReductionEvent {
    RuleKind kind{};
    std::vector<VertexId> removed;
    std::optional<VertexId> introduced;
    std::vector<VertexId> a_side;
    std::vector<VertexId> b_side;
    std::vector<VertexId> chosen;
    int gain = 0;
};

using Trace = std::vector<ReductionEvent>;

enum class StructureKind { S23, S33, S34 };

/// A-B structure. For S33, a = (v, u, w) with u < w adjacent.
struct Structure {
    StructureKind kind{};
    std::vector<VertexId> a;
    std::vector<VertexId> b;

    friend bool operator==(const Structure&, const Structure&) = default;
};

/// b-a-{c,d}: d(a) = 3, N(a) = {b, c, d}, cd is an edge.
struct Bottle {
    VertexId b, a, c, d;
    friend bool operator==(const Bottle&, const Bottle&) = default;
};

/// Edges ab, bc, cd, da present; chords allowed.
struct FourCycle {
    VertexId a, b, c, d;
    friend bool operator==(const FourCycle&, const FourCycle&) = default;
};

struct Domination {
    VertexId dominated;
    VertexId dominator;
    friend bool operator==(const Domination&, const Domination&) = default;
};

struct FoldResult {
    Graph graph;
    int gain = 0;
    ReductionEvent event;
};

// Pure rule applications. Each throws InputError when its precondition
// does not hold in `g`.
FoldResult fold_degree1(const Graph& g, VertexId v);
FoldResult fold_degree2(const Graph& g, VertexId v);
FoldResult take_isolated(const Graph& g, VertexId v);
FoldResult remove_dominated(const Graph& g, Domination d);
FoldResult fold_structure(const Graph& g, const Structure& s);

// In-place variants used by the exhaustive loop and the solver.
ReductionEvent fold_degree1_in_place(Graph& g, VertexId v);
ReductionEvent fold_degree2_in_place(Graph& g, VertexId v);
ReductionEvent take_isolated_in_place(Graph& g, VertexId v);
ReductionEvent remove_dominated_in_place(Graph& g, Domination d);
ReductionEvent fold_structure_in_place(Graph& g, const Structure& s);

/// First (dominator u, dominated v) in ascending (u, v) order with N[u] ⊆ N[v].
std::optional<Domination> find_dominated(const Graph& g);

/// First 2-3 structure, else 3-3, else 3-4, each lowest ids first.
std::optional<Structure> find_structure(const Graph& g);
std::optional<Structure> find_structure_of_kind(const Graph& g, StructureKind kind);
bool is_valid_structure(const Graph& g, const Structure& s);

/// Lowest apex a, then lowest b.
std::optional<Bottle> find_bottle(const Graph& g);
bool is_bottle(const Graph& g, const Bottle& bottle);

/// Lexicographically first (a, b, c, d).
std::optional<FourCycle> find_4cycle(const Graph& g);

/// Applies the highest-priority applicable rule once (isolated vertex,
/// degree-1, degree-2, dominance, 2-3/3-3, 3-4) and appends its event.
/// Returns the applied kind, or nullopt if `g` is reduced.
std::optional<RuleKind> apply_one_reduction(Graph& g, Trace& trace);

struct ReduceOutcome {
    Graph graph;
    int offset = 0;
    Trace trace;
};

ReduceOutcome reduce_exhaustively(const Graph& g);

/// No vertex of degree <= 2, no dominated vertex, no 2-3/3-3/3-4 structure.
/// Isolated vertices are allowed only when allow_isolated is set.
bool is_reduced(const Graph& g, bool allow_isolated = false);

/// Lifts an independent set of `reduced` (the graph after the last event)
/// back through `trace`, newest event first. Throws InputError if the set is
/// not independent in `reduced` or collides with vertices the trace removed.
std::vector<VertexId> reconstruct(const Trace& trace, std::span<const VertexId> reduced_set, const Graph& reduced);

int total_gain(const Trace& trace);

}  // namespace mis3
