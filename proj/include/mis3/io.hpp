#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mis3/graph.hpp"
#include "mis3/solver.hpp"

namespace mis3::io {

enum class Format { Dimacs, EdgeList };

struct ParsedGraph {
    Graph graph;
    std::vector<std::string> warnings;
};

// External ids are 1-based; external id k is internal vertex k-1.

/// "c" comment lines, one "p edge n m" header, then "e u v" lines.
/// Duplicate edges are dropped with a warning, as is an edge count that
/// disagrees with the header. Malformed lines, out-of-range ids and
/// self-loops throw InputError.
ParsedGraph parse_dimacs(std::string_view text);

/// "u v" per line; '#' and '%' start comments. n is the largest id seen.
ParsedGraph parse_edgelist(std::string_view text);

ParsedGraph parse_graph(std::string_view text, Format format);

/// Canonical output. Live vertices are renumbered 1..n in ascending id
/// order; edges sorted by (min endpoint, max endpoint).
std::string write_dimacs(const Graph& g);
std::string write_edgelist(const Graph& g);
std::string write_graph(const Graph& g, Format format);

/// "certificate" followed by ascending 1-based ids, newline-terminated.
std::string format_certificate(std::vector<VertexId> set);

/// Reads whitespace-separated 1-based ids. Lines whose first token is a
/// word are skipped, except "certificate" whose remaining tokens are read,
/// so solver output can be fed back directly. Throws InputError on bad
/// tokens, id 0, or repeated ids.
std::vector<VertexId> parse_certificate(std::string_view text);

/// Flat "key value" lines: alpha, measure, nodes, leaves, component_splits,
/// max_depth, leaf_growth, rule_counts.*, lemma_checks.*, violations, and
/// one "violation" line per recorded violation.
std::string write_stats(const SolveResult& result, long input_measure, bool include_alpha = true);

}  // namespace mis3::io
