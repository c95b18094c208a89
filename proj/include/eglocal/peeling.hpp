#pragma once

// Layered peeling certificate for the cycle-weight edge bound.
//
// Starting from a maximum-weight vertex u, each layer takes a longest path
// from the current start vertex, removes the closure terminals plus their
// off-path twins, then drops vertices left isolated. The edges touching each
// removed layer are charged to the weights of the removed vertices.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "eglocal/errors.hpp"
#include "eglocal/graph.hpp"
#include "eglocal/path.hpp"
#include "eglocal/weights.hpp"

namespace eglocal {

/// One layer; all ids refer to the input graph.
struct PeelLayer {
    int index = 0;
    VertexSet vertices_before;       // V(G_i)
    Graph graph_before;              // G_i embedded in the input's id space
    Vertex start = -1;               // x
    VPath path;                      // longest x-path in G_i
    VertexSet terminals;             // closure terminals in G_i
    VertexSet removed;               // terminals plus off-path twins
    std::vector<Edge> removed_edges; // edges of G_i touching `removed`
    std::vector<int> layer_weight;   // c_i(v) for v in vertices_before, -1 elsewhere
    std::int64_t weight_sum_halves = 0;  // sum of c_i over `removed`
    VertexSet isolated_removed;      // dropped after removing `removed`
};

struct PeelTrace {
    int n = 0;
    std::optional<Vertex> u;         // absent when the graph has no edges
    VertexSet initial_isolated;      // isolated in the input, never peeled
    std::vector<PeelLayer> layers;
    int m = 0;
    std::int64_t layer_sum_halves = 0;
    std::int64_t bound_halves = 0;   // sum c(v) - circumference
};

PeelTrace peel(const Graph& g, const SearchLimits& limits = {});

struct CertificateCheck {
    std::string name;
    bool passed = true;
    std::int64_t slack_halves = 0;
    std::string detail;
};

struct CertificateReport {
    std::vector<CertificateCheck> checks;
    bool all_passed = true;
    /// bound_halves - 2m
    std::int64_t final_slack_halves = 0;
    bool equality = false;
    /// Trace-level equality conditions: every layer tight, the layers cover
    /// V \ {u} (isolated input vertices included), and no removed vertex lost weight.
    bool layers_tight = false;
    bool covers_all_but_u = false;
    bool weights_preserved = false;
    /// Removed vertices whose layer weight fell below their weight in the input.
    std::vector<Vertex> weight_drops;
};

/// Throws std::invalid_argument if the trace does not belong to g.
CertificateReport verify_certificate(const PeelTrace& trace, const Graph& g, const WeightTable& weights);

}  // namespace eglocal
