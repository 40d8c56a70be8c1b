#include "mis3/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "mis3/error.hpp"

namespace mis3::io {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        auto pos = text.find('\n');
        std::string_view line = text.substr(0, pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t j = i;
        while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_uint(std::string_view tok, unsigned long& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
}

std::string where(std::size_t line_no) { return "line " + std::to_string(line_no) + ": "; }

unsigned long need_uint(std::string_view tok, std::size_t line_no) {
    unsigned long v = 0;
    if (!parse_uint(tok, v)) throw InputError(where(line_no) + "expected a non-negative integer, got '" + std::string(tok) + "'");
    return v;
}

ParsedGraph from_edge_list(std::size_t n, const std::vector<std::pair<unsigned long, unsigned long>>& raw,
                           std::vector<std::string> warnings) {
    std::vector<Edge> edges;
    edges.reserve(raw.size());
    for (auto [u, v] : raw) edges.emplace_back(static_cast<VertexId>(u - 1), static_cast<VertexId>(v - 1));
    Graph g = build_graph(n, edges);
    if (g.edge_count() != raw.size())
        warnings.push_back(std::to_string(raw.size() - g.edge_count()) + " duplicate edge(s) ignored");
    return {std::move(g), std::move(warnings)};
}

std::vector<std::pair<VertexId, VertexId>> external_edges(const Graph& g) {
    std::vector<VertexId> external(g.id_bound(), 0);
    VertexId next = 1;
    for (VertexId v : g.vertices()) external[v] = next++;
    std::vector<std::pair<VertexId, VertexId>> out;
    for (auto [u, v] : g.edges()) out.emplace_back(external[u], external[v]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

ParsedGraph parse_dimacs(std::string_view text) {
    bool have_header = false;
    unsigned long n = 0, m = 0;
    std::vector<std::pair<unsigned long, unsigned long>> raw;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::size_t line_no = i + 1;
        auto tok = tokens(lines[i]);
        if (tok.empty() || tok[0] == "c") continue;
        if (tok[0] == "p") {
            if (have_header) throw InputError(where(line_no) + "second 'p' line");
            if (tok.size() != 4 || (tok[1] != "edge" && tok[1] != "col"))
                throw InputError(where(line_no) + "malformed header, expected 'p edge <n> <m>'");
            n = need_uint(tok[2], line_no);
            m = need_uint(tok[3], line_no);
            have_header = true;
        } else if (tok[0] == "e") {
            if (!have_header) throw InputError(where(line_no) + "edge line before 'p' header");
            if (tok.size() != 3) throw InputError(where(line_no) + "malformed edge line, expected 'e <u> <v>'");
            unsigned long u = need_uint(tok[1], line_no), v = need_uint(tok[2], line_no);
            if (u < 1 || u > n || v < 1 || v > n)
                throw InputError(where(line_no) + "vertex out of range 1.." + std::to_string(n));
            if (u == v) throw InputError(where(line_no) + "self-loop on vertex " + std::to_string(u));
            raw.emplace_back(u, v);
        } else {
            throw InputError(where(line_no) + "unknown line type '" + std::string(tok[0]) + "'");
        }
    }
    if (!have_header) throw InputError("missing 'p edge <n> <m>' header");
    auto parsed = from_edge_list(n, raw, {});
    if (parsed.graph.edge_count() != m)
        parsed.warnings.push_back("header declares " + std::to_string(m) + " edges, found " +
                                  std::to_string(parsed.graph.edge_count()));
    return parsed;
}

ParsedGraph parse_edgelist(std::string_view text) {
    std::vector<std::pair<unsigned long, unsigned long>> raw;
    unsigned long n = 0;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        std::size_t line_no = i + 1;
        std::string_view line = lines[i];
        if (auto c = line.find_first_of("#%"); c != std::string_view::npos) line = line.substr(0, c);
        auto tok = tokens(line);
        if (tok.empty()) continue;
        if (tok.size() != 2) throw InputError(where(line_no) + "expected 'u v'");
        unsigned long u = need_uint(tok[0], line_no), v = need_uint(tok[1], line_no);
        if (u < 1 || v < 1) throw InputError(where(line_no) + "vertex ids are 1-based");
        if (u == v) throw InputError(where(line_no) + "self-loop on vertex " + std::to_string(u));
        n = std::max({n, u, v});
        raw.emplace_back(u, v);
    }
    return from_edge_list(n, raw, {});
}

ParsedGraph parse_graph(std::string_view text, Format format) {
    return format == Format::Dimacs ? parse_dimacs(text) : parse_edgelist(text);
}

std::string write_dimacs(const Graph& g) {
    std::string out = "p edge " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : external_edges(g)) out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string write_edgelist(const Graph& g) {
    std::string out;
    for (auto [u, v] : external_edges(g)) out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

std::string write_graph(const Graph& g, Format format) {
    return format == Format::Dimacs ? write_dimacs(g) : write_edgelist(g);
}

std::string format_certificate(std::vector<VertexId> set) {
    std::sort(set.begin(), set.end());
    std::string out = "certificate";
    for (VertexId v : set) out += " " + std::to_string(v + 1);
    out += "\n";
    return out;
}

std::vector<VertexId> parse_certificate(std::string_view text) {
    std::vector<VertexId> out;
    auto lines = split_lines(text);
    for (std::size_t i = 0; i < lines.size(); ++i) {
        auto tok = tokens(lines[i]);
        if (tok.empty()) continue;
        std::size_t first = 0;
        unsigned long probe = 0;
        if (!parse_uint(tok[0], probe)) {
            if (tok[0] != "certificate") continue;
            first = 1;
        }
        for (std::size_t j = first; j < tok.size(); ++j) {
            unsigned long id = need_uint(tok[j], i + 1);
            if (id == 0) throw InputError(where(i + 1) + "vertex ids are 1-based");
            out.push_back(static_cast<VertexId>(id - 1));
        }
    }
    std::vector<VertexId> sorted = out;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw InputError("certificate lists a vertex more than once");
    return sorted;
}

std::string write_stats(const SolveResult& result, long input_measure, bool include_alpha) {
    const SearchStats& s = result.stats;
    std::ostringstream out;
    if (include_alpha) out << "alpha " << result.alpha << "\n";
    out << "measure " << input_measure << "\n";
    out << "nodes " << s.branch_nodes << "\n";
    out << "leaves " << s.leaves << "\n";
    out << "component_splits " << s.component_splits << "\n";
    out << "max_depth " << s.max_depth << "\n";
    if (input_measure > 0) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.6f",
                      std::pow(static_cast<double>(std::max<std::size_t>(s.leaves, 1)), 1.0 / static_cast<double>(input_measure)));
        out << "leaf_growth " << buf << "\n";
    }
    for (const auto& [rule, count] : s.rule_counts) out << "rule_counts." << rule << " " << count << "\n";
    for (const auto& [lemma, count] : s.lemma_checks) out << "lemma_checks." << lemma << " " << count << "\n";
    out << "violations " << s.lemma_violations.size() << "\n";
    for (const auto& v : s.lemma_violations)
        out << "violation " << lemma_name(v.lemma) << " node=" << v.node << " observed=" << v.observed
            << " required=" << v.required << "\n";
    return out.str();
}

}  // namespace mis3::io
