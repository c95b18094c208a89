#include "eglocal/peeling.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "eglocal/rotation.hpp"

namespace eglocal {

namespace {

Vertex argmax_weight(const std::vector<int>& c) {
    return static_cast<Vertex>(std::max_element(c.begin(), c.end()) - c.begin());
}

Graph embed(const Subgraph& s, int n) {
    std::vector<Edge> edges;
    for (const Edge& e : s.graph.edges()) {
        const Vertex a = s.to_source[e.u];
        const Vertex b = s.to_source[e.v];
        edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(n, edges);
}

VertexSet lift(VertexSet local, const std::vector<Vertex>& to_source) {
    VertexSet out;
    for (Vertex v : local) out.insert(to_source[v]);
    return out;
}

}  // namespace

PeelTrace peel(const Graph& g, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    const int n = g.order();
    PeelTrace trace;
    trace.n = n;
    trace.m = g.edge_count();

    const WeightTable base = vertex_weights(g, limits);
    trace.bound_halves =
        n == 0 ? 0 : std::accumulate(base.c.begin(), base.c.end(), std::int64_t{0}) - base.circ;

    Subgraph current = remove_isolated(g);
    trace.initial_isolated = g.vertices() - lift(current.graph.vertices(), current.to_source);
    if (current.graph.order() == 0) return trace;

    {
        std::vector<int> c_nonisolated;
        for (Vertex v : current.to_source) c_nonisolated.push_back(base.c[v]);
        trace.u = current.to_source[argmax_weight(c_nonisolated)];
    }

    Vertex x = *trace.u;  // input ids
    for (int i = 0; current.graph.order() > 0; ++i) {
        const Graph& gi = current.graph;
        const WeightTable wi = vertex_weights(gi, limits);

        Vertex x_local = -1;
        for (int j = 0; j < gi.order(); ++j)
            if (current.to_source[j] == x) x_local = j;
        if (x_local < 0) {
            x_local = argmax_weight(wi.c);
            x = current.to_source[x_local];
        }

        const VPath local_path = longest_path_from(gi, x_local, limits);
        const TerminalSets sets = closure_terminals(gi, local_path, limits);

        PeelLayer layer;
        layer.index = i;
        layer.vertices_before = lift(gi.vertices(), current.to_source);
        layer.graph_before = embed(current, n);
        layer.start = x;
        {
            std::vector<Vertex> seq;
            for (Vertex v : local_path.seq()) seq.push_back(current.to_source[v]);
            layer.path = VPath(std::move(seq));
        }
        layer.terminals = lift(sets.terminals, current.to_source);
        layer.removed = lift(sets.extended, current.to_source);
        layer.layer_weight.assign(n, -1);
        for (int j = 0; j < gi.order(); ++j) layer.layer_weight[current.to_source[j]] = wi.c[j];
        for (Vertex v : sets.extended) layer.weight_sum_halves += wi.c[v];
        for (const Edge& e : gi.edges()) {
            if (sets.extended.contains(e.u) || sets.extended.contains(e.v)) {
                const Vertex a = current.to_source[e.u];
                const Vertex b = current.to_source[e.v];
                layer.removed_edges.push_back({std::min(a, b), std::max(a, b)});
            }
        }

        const Subgraph stripped = delete_vertices(gi, sets.extended);
        const Subgraph next = remove_isolated(stripped.graph);
        Subgraph composed;
        composed.graph = next.graph;
        for (Vertex v : next.to_source) composed.to_source.push_back(current.to_source[stripped.to_source[v]]);
        layer.isolated_removed = layer.vertices_before - layer.removed - lift(composed.graph.vertices(), composed.to_source);

        trace.layer_sum_halves += layer.weight_sum_halves;
        trace.layers.push_back(std::move(layer));
        current = std::move(composed);
    }
    return trace;
}

CertificateReport verify_certificate(const PeelTrace& trace, const Graph& g, const WeightTable& weights) {
    const int n = g.order();
    if (trace.n != n || trace.m != g.edge_count() || static_cast<int>(weights.c.size()) != n)
        throw std::invalid_argument("verify_certificate: trace does not match graph");

    CertificateReport report;
    auto add = [&](CertificateCheck check) {
        report.all_passed = report.all_passed && check.passed;
        report.checks.push_back(std::move(check));
    };

    // (a) removed-edge sets partition E(G)
    {
        std::vector<Edge> all;
        for (const PeelLayer& layer : trace.layers) {
            for (const Edge& e : layer.removed_edges) {
                if (e.u >= n || e.v >= n || !g.adjacent(e.u, e.v))
                    throw std::invalid_argument("verify_certificate: trace edge not in graph");
                all.push_back(e);
            }
        }
        std::sort(all.begin(), all.end());
        const bool disjoint = std::adjacent_find(all.begin(), all.end()) == all.end();
        const bool covers = all == g.edges();
        add({"edge_partition", disjoint && covers, 0,
             disjoint ? (covers ? "" : "layers miss some edges") : "an edge is charged twice"});
    }

    // (b) per-layer charge
    bool tight = true;
    {
        CertificateCheck check{"layer_charge", true, 0, ""};
        for (const PeelLayer& layer : trace.layers) {
            const std::int64_t slack = layer.weight_sum_halves - 2 * static_cast<std::int64_t>(layer.removed_edges.size());
            check.slack_halves += slack;
            if (slack < 0) {
                check.passed = false;
                check.detail += "layer " + std::to_string(layer.index) + " over-charged; ";
            }
            tight = tight && slack == 0;
        }
        add(check);
    }

    // (c) layer weights never exceed input weights
    {
        CertificateCheck check{"weight_monotone", true, 0, ""};
        for (const PeelLayer& layer : trace.layers) {
            for (Vertex v : layer.removed) {
                const int ci = layer.layer_weight[v];
                if (ci > weights.c[v]) {
                    check.passed = false;
                    check.detail += "vertex " + std::to_string(v) + " gained weight; ";
                } else if (ci < weights.c[v]) {
                    report.weight_drops.push_back(v);
                    check.slack_halves += weights.c[v] - ci;
                }
            }
        }
        add(check);
    }

    // (d) u never removed; layers disjoint
    VertexSet covered;
    {
        bool excluded = true;
        bool disjoint = true;
        for (const PeelLayer& layer : trace.layers) {
            if (trace.u && layer.removed.contains(*trace.u)) excluded = false;
            if (covered.intersects(layer.removed)) disjoint = false;
            covered |= layer.removed;
        }
        add({"start_excluded", excluded, 0, excluded ? "" : "u appears in a removed layer"});
        add({"layers_disjoint", disjoint, 0, disjoint ? "" : "a vertex is removed twice"});
    }

    // (e) m <= sum of layers <= global bound
    {
        std::int64_t layer_sum = 0;
        for (const PeelLayer& layer : trace.layers) layer_sum += layer.weight_sum_halves;
        const std::int64_t twice_m = 2 * static_cast<std::int64_t>(trace.m);
        const bool ok = layer_sum == trace.layer_sum_halves && twice_m <= layer_sum && layer_sum <= trace.bound_halves;
        add({"bound_chain", ok, trace.bound_halves - layer_sum,
             ok ? "" : "chain 2m <= layers <= bound broken"});
    }

    report.final_slack_halves = trace.bound_halves - 2 * static_cast<std::int64_t>(trace.m);
    report.equality = report.final_slack_halves == 0;
    report.layers_tight = tight;
    VertexSet expected = g.vertices();
    if (trace.u) expected.erase(*trace.u);
    else if (n > 0) expected.erase(0);  // edgeless: any vertex may stand in for u
    report.covers_all_but_u = covered == expected;
    report.weights_preserved = report.weight_drops.empty();
    return report;
}

}  // namespace eglocal
