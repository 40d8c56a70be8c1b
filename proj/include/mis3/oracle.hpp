#pragma once

#include <cstddef>
#include <vector>

#include "mis3/graph.hpp"

namespace mis3::oracle {

inline constexpr std::size_t kDefaultLimit = 25;
// Above this many vertices the oracle switches from subset enumeration to
// plain include/exclude branching.
inline constexpr std::size_t kEnumerationLimit = 20;

struct OracleResult {
    std::size_t size = 0;
    std::vector<VertexId> witness;  // ascending
};

/// Exact maximum independent set by exhaustive search. Shares no code with
/// the reduction rules or the branch-and-reduce solver.
/// Throws InputError if the graph has more than `limit` vertices (limit <= 64).
OracleResult brute_force_mis(const Graph& g, std::size_t limit = kDefaultLimit);

/// True iff g has a vertex cover with at most k vertices.
bool brute_force_vc_decide(const Graph& g, long k, std::size_t limit = kDefaultLimit);

}  // namespace mis3::oracle
