#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "eglocal/analysis.hpp"
#include "eglocal/blocks.hpp"
#include "eglocal/generators.hpp"
#include "eglocal/graph6.hpp"
#include "eglocal/json_io.hpp"
#include "eglocal/peeling.hpp"
#include "eglocal/scan.hpp"
#include "eglocal/weights.hpp"

namespace eglocal::cli {

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct Common {
    bool csv = false;
    int jobs = 1;
    int max_n = 20;
    std::size_t closure_cap = 1'000'000;
    std::uint64_t seed = 1;
    bool quiet = false;
    bool timing = false;

    SearchLimits limits() const { return {max_n, closure_cap}; }
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Record {
    std::size_t line;
    std::string text;
    Graph graph;
};

std::vector<Record> load(const std::string& path, std::istream& in) {
    std::vector<Graph6Record> raw;
    if (path == "-") {
        raw = read_graph6_records(in);
    } else {
        std::ifstream file(path);
        if (!file) throw InputError("cannot open " + path);
        raw = read_graph6_records(file);
    }
    std::vector<Record> out;
    out.reserve(raw.size());
    for (Graph6Record& r : raw) {
        try {
            out.push_back({r.line, r.text, parse_graph6(r.text)});
        } catch (const Graph6Error& e) {
            throw InputError("line " + std::to_string(r.line) + ": " + e.what());
        }
    }
    return out;
}

// Runs `body` on each record, turning cap refusals into input errors naming the line.
template <class Body>
void each_record(const std::vector<Record>& records, Body&& body) {
    for (const Record& r : records) {
        try {
            body(r);
        } catch (const CapExceeded& e) {
            throw InputError("line " + std::to_string(r.line) + ": " + e.what());
        }
    }
}

std::string csv_join(const std::vector<int>& xs) {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? " " : "") + std::to_string(xs[i]);
    return out;
}

int cmd_weights(const Common& o, const std::string& input, std::istream& in, std::ostream& out) {
    const auto records = load(input, in);
    if (o.csv) out << "graph6,vertex,p,c\n";
    each_record(records, [&](const Record& r) {
        const WeightTable w = vertex_weights(r.graph, o.limits());
        if (o.csv) {
            for (int v = 0; v < r.graph.order(); ++v) out << r.text << ',' << v << ',' << w.p[v] << ',' << w.c[v] << '\n';
            return;
        }
        Json j;
        j["line"] = r.line;
        j["graph6"] = r.text;
        j["vertex"] = to_json(w);
        j["edge"] = to_json(edge_weights(r.graph, o.limits()));
        out << j.dump() << '\n';
    });
    return kOk;
}

int cmd_bounds(const Common& o, const std::string& input, std::istream& in, std::ostream& out) {
    const auto records = load(input, in);
    int code = kOk;
    if (o.csv) out << scan_csv_header() << '\n';
    each_record(records, [&](const Record& r) {
        ScanOptions so;
        so.limits = o.limits();
        so.edge_local = true;
        const ScanRow row = scan_one(r.graph, so, r.line);
        if (!row.error.empty()) throw CapExceeded(row.error);
        if (row.violation || row.mismatch) code = kViolation;
        if (o.csv) {
            out << to_csv(row) << '\n';
            return;
        }
        Json j;
        j["line"] = r.line;
        j["graph6"] = r.text;
        j["report"] = to_json(bound_report(r.graph, o.limits(), true));
        out << j.dump() << '\n';
    });
    return code;
}

int cmd_peel(const Common& o, const std::string& input, std::istream& in, std::ostream& out) {
    const auto records = load(input, in);
    int code = kOk;
    if (o.csv) out << "graph6,u,layers,m,layer_sum_halves,bound_halves,certificate_ok\n";
    each_record(records, [&](const Record& r) {
        const PeelTrace trace = peel(r.graph, o.limits());
        const CertificateReport cert = verify_certificate(trace, r.graph, vertex_weights(r.graph, o.limits()));
        if (!cert.all_passed) code = kViolation;
        if (o.csv) {
            out << r.text << ',' << (trace.u ? std::to_string(*trace.u) : "") << ',' << trace.layers.size() << ','
                << trace.m << ',' << trace.layer_sum_halves << ',' << trace.bound_halves << ','
                << (cert.all_passed ? 1 : 0) << '\n';
            return;
        }
        Json j;
        j["line"] = r.line;
        j["graph6"] = r.text;
        j["trace"] = to_json(trace);
        j["certificate"] = to_json(cert);
        out << j.dump() << '\n';
    });
    return code;
}

int cmd_blocks(const Common& o, const std::string& input, std::istream& in, std::ostream& out) {
    const auto records = load(input, in);
    if (o.csv) out << "graph6,block_orders,cut_vertices,is_block_graph,is_parent_dominated\n";
    each_record(records, [&](const Record& r) {
        const BlockDecomposition d = decompose(r.graph);
        if (o.csv) {
            out << r.text << ',' << csv_join(d.orders) << ',' << csv_join(d.cut_vertices.to_vector()) << ','
                << (d.is_block_graph ? 1 : 0) << ',' << (d.is_parent_dominated ? 1 : 0) << '\n';
            return;
        }
        Json j;
        j["line"] = r.line;
        j["graph6"] = r.text;
        j["blocks"] = to_json(d);
        out << j.dump() << '\n';
    });
    return kOk;
}

int cmd_check(const Common& o, const std::string& input, std::istream& in, std::ostream& out) {
    const auto records = load(input, in);
    int code = kOk;
    if (o.csv) out << scan_csv_header() << ",certificate_failed,lemma_failed,audit_failed\n";
    each_record(records, [&](const Record& r) {
        ScanOptions so;
        so.limits = o.limits();
        so.edge_local = so.peel = so.lemmas = so.extremal_audit = true;
        const ScanRow row = scan_one(r.graph, so, r.line);
        if (!row.error.empty()) throw CapExceeded(row.error);
        const bool failed = row.violation || row.mismatch || row.certificate_failed || row.lemma_failed || row.audit_failed;
        if (failed) code = kViolation;
        if (o.csv) {
            out << to_csv(row) << ',' << row.certificate_failed << ',' << row.lemma_failed << ',' << row.audit_failed << '\n';
            return;
        }
        const CharacterizationVerdict v = check_characterizations(r.graph, o.limits());
        Json j;
        j["line"] = r.line;
        j["graph6"] = r.text;
        j["passed"] = !failed;
        j["characterizations"] = {{"path_consistent", v.path_consistent}, {"cycle_consistent", v.cycle_consistent},
                                  {"counterexample", v.counterexample}};
        j["violation"] = row.violation;
        j["mismatch"] = row.mismatch;
        j["certificate_failed"] = row.certificate_failed;
        j["lemma_failed"] = row.lemma_failed;
        j["audit_failed"] = row.audit_failed;
        j["extremal"] = row.extremal;
        if (!row.detail.empty()) j["detail"] = row.detail;
        out << j.dump() << '\n';
    });
    return code;
}

struct GenParams {
    std::string family;
    int n = 0;
    double p = 0.5;
    int m = 0;
    int r = 2;
    std::vector<int> orders;
    int blocks = 1;
    int max_order = 3;
    int count = 1;
};

Graph generate_one(const GenParams& g, std::uint64_t seed) {
    const std::string& f = g.family;
    if (f == "gnp") return gen_gnp(g.n, g.p, seed);
    if (f == "gnm") return gen_gnm(g.n, g.m, seed);
    if (f == "turan") return turan(g.n, g.r);
    if (f == "path") return path_graph(g.n);
    if (f == "cycle") return cycle_graph(g.n);
    if (f == "star") return star(g.n);
    if (f == "clique-union") return gen_clique_union(g.orders);
    if (f == "parent-dominated") return gen_parent_dominated(seed, g.blocks, g.max_order);
    throw InputError("unknown family " + f);
}

int cmd_gen(const Common& o, const GenParams& params, std::ostream& out) {
    if (params.count < 0) throw InputError("--count must be >= 0");
    for (int i = 0; i < params.count; ++i) {
        try {
            out << to_graph6(generate_one(params, o.seed + static_cast<std::uint64_t>(i))) << '\n';
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }
    return kOk;
}

int cmd_enumerate(int n, std::ostream& out) {
    std::uint64_t count = 0;
    try {
        count = labeled_count(n);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    for (std::uint64_t i = 0; i < count; ++i) out << to_graph6(labeled_graph(n, i)) << '\n';
    return kOk;
}

struct ScanFlags {
    bool edge = false;
    bool peel = false;
    bool lemmas = false;
    bool audit = false;
    bool all = false;
};

int cmd_scan(const Common& o, const ScanFlags& flags, const std::string& input, std::istream& in, std::ostream& out,
             std::ostream& err) {
    const auto records = load(input, in);
    ScanOptions so;
    so.jobs = o.jobs;
    so.limits = o.limits();
    so.edge_local = flags.edge || flags.all;
    so.peel = flags.peel || flags.all;
    so.lemmas = flags.lemmas || flags.all;
    so.extremal_audit = flags.audit || flags.all;

    if (o.csv && !o.quiet) out << scan_csv_header() << '\n';
    std::optional<std::size_t> first_error_line;
    std::string first_error;
    const ScanSummary summary = scan(
        records.size(), [&](std::size_t i) { return records[i].graph; }, so,
        [&](const ScanRow& row) {
            if (!row.error.empty() && !first_error_line) {
                first_error_line = records[row.index].line;
                first_error = row.error;
            }
            if (o.quiet) return;
            if (o.csv) {
                out << to_csv(row) << '\n';
            } else {
                Json j = to_json(row);
                j["line"] = records[row.index].line;
                out << j.dump() << '\n';
            }
        });

    const Json s = to_json(summary, o.timing);
    if (o.csv) err << s.dump() << '\n';
    else out << Json{{"summary", s}}.dump() << '\n';

    if (first_error_line) {
        err << "error: line " << *first_error_line << ": " << first_error << '\n';
        return kInputError;
    }
    return summary.clean() ? kOk : kViolation;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Checks per-vertex path and cycle edge bounds on graph6 input"};
    app.require_subcommand(1);
    app.fallthrough();

    Common o;
    app.add_flag("--csv", o.csv, "CSV output instead of JSON Lines");
    app.add_option("--jobs", o.jobs, "Worker threads for scan")->check(CLI::PositiveNumber);
    app.add_option("--max-n", o.max_n, "Largest order accepted by the exact searches")->check(CLI::Range(0, 30));
    app.add_option("--closure-cap", o.closure_cap, "Largest transform closure explored");
    app.add_option("--seed", o.seed, "Seed for gen");
    app.add_flag("--quiet", o.quiet, "Scan: print the summary only");
    app.add_flag("--timing", o.timing, "Scan: include elapsed seconds in the summary");

    std::string input = "-";
    auto add_input = [&](CLI::App* sub) { sub->add_option("input", input, "graph6 file, or - for standard input"); };

    CLI::App* weights = app.add_subcommand("weights", "Vertex and edge weights");
    add_input(weights);
    CLI::App* bounds = app.add_subcommand("bounds", "Bounds, equality flags and edge-weighted sums");
    add_input(bounds);
    CLI::App* peel_cmd = app.add_subcommand("peel", "Peeling trace and its certificate");
    add_input(peel_cmd);
    CLI::App* blocks = app.add_subcommand("blocks", "Block decomposition and parent domination");
    add_input(blocks);
    CLI::App* check = app.add_subcommand("check", "Every check on every record");
    add_input(check);

    GenParams gp;
    CLI::App* gen = app.add_subcommand("gen", "Generate graph6 records");
    gen->add_option("family", gp.family, "gnp, gnm, turan, path, cycle, star, clique-union, parent-dominated")->required();
    gen->add_option("--n", gp.n, "Vertex count (leaves for star)");
    gen->add_option("--p", gp.p, "Edge probability for gnp");
    gen->add_option("--m", gp.m, "Edge count for gnm");
    gen->add_option("--r", gp.r, "Parts for turan");
    gen->add_option("--orders", gp.orders, "Clique orders for clique-union")->delimiter(',');
    gen->add_option("--blocks", gp.blocks, "Block count for parent-dominated");
    gen->add_option("--max-order", gp.max_order, "Largest block order for parent-dominated");
    gen->add_option("--count", gp.count, "Graphs to emit; seeds run from --seed upward");

    ScanFlags sf;
    CLI::App* scan_cmd = app.add_subcommand("scan", "Verify the bounds over a corpus");
    add_input(scan_cmd);
    scan_cmd->add_flag("--edge", sf.edge, "Also check the edge-weighted bounds");
    scan_cmd->add_flag("--peel", sf.peel, "Also verify peeling certificates");
    scan_cmd->add_flag("--lemmas", sf.lemmas, "Also run the closure lemmas from every vertex");
    scan_cmd->add_flag("--audit", sf.audit, "Also audit cycle-extremal graphs");
    scan_cmd->add_flag("--all", sf.all, "All of the above");

    int enum_n = 0;
    CLI::App* enumerate = app.add_subcommand("enumerate", "All labeled graphs on n <= 7 vertices");
    enumerate->add_option("n", enum_n, "Vertex count")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*weights) return cmd_weights(o, input, in, out);
        if (*bounds) return cmd_bounds(o, input, in, out);
        if (*peel_cmd) return cmd_peel(o, input, in, out);
        if (*blocks) return cmd_blocks(o, input, in, out);
        if (*check) return cmd_check(o, input, in, out);
        if (*gen) return cmd_gen(o, gp, out);
        if (*scan_cmd) return cmd_scan(o, sf, input, in, out, err);
        if (*enumerate) return cmd_enumerate(enum_n, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kInputError;
}

}  // namespace eglocal::cli
