#include "mis3/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "mis3/error.hpp"
#include "mis3/gen.hpp"
#include "mis3/io.hpp"
#include "mis3/kernel.hpp"
#include "mis3/solver.hpp"

namespace mis3::cli {

namespace {

struct Options {
    std::string input;
    std::string second_input;
    std::string format = "dimacs";
    std::string output;
    std::string family;
    bool certificate = false;
    bool stats = false;
    bool assert_lemmas = false;
    bool cover = false;
    std::size_t threshold = 15;
    std::size_t n = 10;
    std::uint64_t seed = 1;
    long k = 0;
};

std::string read_source(const std::string& path, std::istream& in) {
    if (path == "-") return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

io::Format parse_format(const std::string& name) {
    if (name == "dimacs") return io::Format::Dimacs;
    if (name == "edgelist") return io::Format::EdgeList;
    throw InputError("unknown format '" + name + "'");
}

Graph load_graph(const Options& o, std::istream& in, std::ostream& err) {
    auto parsed = io::parse_graph(read_source(o.input, in), parse_format(o.format));
    for (const auto& w : parsed.warnings) err << "warning: " << w << "\n";
    return std::move(parsed.graph);
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write '" + path + "'");
    f << text;
}

int solve_mis(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o, in, err);
    SolveOptions opts;
    opts.want_certificate = o.certificate;
    opts.assert_lemmas = o.assert_lemmas;
    opts.small_component_threshold = o.threshold;
    auto res = mis_solve(g, opts);
    out << "alpha " << res.alpha << "\n";
    if (res.certificate) out << io::format_certificate(*res.certificate);
    if (o.stats) out << io::write_stats(res, measure(g), false);
    if (o.assert_lemmas && !res.stats.lemma_violations.empty()) {
        for (const auto& v : res.stats.lemma_violations)
            err << "lemma violation: " << lemma_name(v.lemma) << " at node " << v.node << ": decrease " << v.observed
                << " < " << v.required << "\n";
        return kAssertionFailure;
    }
    return kOk;
}

int solve_vc(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o, in, err);
    auto res = mvc_solve(g);
    out << "vc " << res.size << "\n";
    if (o.certificate) out << io::format_certificate(res.cover);
    return kOk;
}

int decide_vc(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o, in, err);
    auto res = vc_decide(g, o.k);
    if (!res.decision) {
        out << "NO\n";
        return kNo;
    }
    out << "YES\n" << io::format_certificate(*res.cover);
    return kOk;
}

int kernelize(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o, in, err);
    auto k = nt_kernel(g);
    out << "c0 " << k.c0.size() << "\n"
        << "v0 " << k.v0.size() << "\n"
        << "i0 " << k.i0.size() << "\n"
        << "lp_value " << k.lp_value.to_string() << "\n";
    if (!o.output.empty()) write_output(o.output, io::write_graph(induced_subgraph(g, k.v0), parse_format(o.format)), out);
    return kOk;
}

int generate(const Options& o, std::ostream& out) {
    Graph g = o.family == "cubic" ? gen::random_cubic(o.n, o.seed) : gen::named(o.family);
    write_output(o.output, io::write_graph(g, parse_format(o.format)), out);
    return kOk;
}

int verify(const Options& o, std::istream& in, std::ostream& out, std::ostream& err) {
    Graph g = load_graph(o, in, err);
    auto set = io::parse_certificate(read_source(o.second_input, in));
    for (VertexId v : set)
        if (!g.contains(v)) throw InputError("certificate names vertex " + std::to_string(v + 1) + " outside the graph");
    bool ok = o.cover ? is_vertex_cover(g, set) : is_independent_set(g, set);
    const char* what = o.cover ? "vertex cover" : "independent set";
    if (!ok) {
        out << "INVALID " << what << "\n";
        return kInputError;
    }
    out << "VALID " << what << " size " << set.size() << "\n";
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact maximum independent set and vertex cover for sparse graphs", "mis3"};
    app.require_subcommand(1);
    Options o;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", o.format, "Graph file format")->check(CLI::IsMember({"dimacs", "edgelist"}));
    };

    auto* solve_mis_cmd = app.add_subcommand("solve-mis", "Maximum independent set");
    solve_mis_cmd->add_option("input", o.input, "Graph file, '-' for stdin")->required();
    solve_mis_cmd->add_flag("--certificate", o.certificate, "Print the independent set");
    solve_mis_cmd->add_flag("--stats", o.stats, "Print search statistics");
    solve_mis_cmd->add_flag("--assert-lemmas", o.assert_lemmas, "Check measure-decrease bounds; exit 3 on violation");
    solve_mis_cmd->add_option("--threshold", o.threshold, "Components up to this size go to the exhaustive solver")
        ->check(CLI::Range(0, static_cast<int>(oracle::kDefaultLimit)));
    add_format(solve_mis_cmd);

    auto* solve_vc_cmd = app.add_subcommand("solve-vc", "Minimum vertex cover");
    solve_vc_cmd->add_option("input", o.input, "Graph file, '-' for stdin")->required();
    solve_vc_cmd->add_flag("--certificate", o.certificate, "Print the cover");
    add_format(solve_vc_cmd);

    auto* decide_cmd = app.add_subcommand("decide-vc", "Is there a vertex cover of size <= k?");
    decide_cmd->add_option("input", o.input, "Graph file, '-' for stdin")->required();
    decide_cmd->add_option("-k", o.k, "Cover size bound")->required()->check(CLI::NonNegativeNumber);
    add_format(decide_cmd);

    auto* kernel_cmd = app.add_subcommand("kernelize", "Nemhauser-Trotter kernel");
    kernel_cmd->add_option("input", o.input, "Graph file, '-' for stdin")->required();
    kernel_cmd->add_option("-o", o.output, "Write the kernel graph G(V0) here");
    add_format(kernel_cmd);

    auto* gen_cmd = app.add_subcommand("gen", "Generate a graph");
    gen_cmd->add_option("family", o.family, "'cubic' or a named graph (petersen, cycle-5, k23, ...)")->required();
    gen_cmd->add_option("-n", o.n, "Vertex count for 'cubic'");
    gen_cmd->add_option("--seed", o.seed, "Seed for 'cubic'");
    gen_cmd->add_option("-o", o.output, "Output file (default stdout)");
    add_format(gen_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Check a certificate against a graph");
    verify_cmd->add_option("input", o.input, "Graph file")->required();
    verify_cmd->add_option("certificate", o.second_input, "Certificate file")->required();
    verify_cmd->add_flag("--cover", o.cover, "Certificate is a vertex cover instead of an independent set");
    add_format(verify_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (solve_mis_cmd->parsed()) return solve_mis(o, in, out, err);
        if (solve_vc_cmd->parsed()) return solve_vc(o, in, out, err);
        if (decide_cmd->parsed()) return decide_vc(o, in, out, err);
        if (kernel_cmd->parsed()) return kernelize(o, in, out, err);
        if (gen_cmd->parsed()) return generate(o, out);
        if (verify_cmd->parsed()) return verify(o, in, out, err);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const InternalError& e) {
        err << "internal error: " << e.what() << "\n";
        return kAssertionFailure;
    }
    return kInputError;
}

}  // namespace mis3::cli
