#pragma once

#include <vector>

#include "eglocal/errors.hpp"
#include "eglocal/graph.hpp"
#include "eglocal/path.hpp"

namespace eglocal {

/// Per-vertex localized weights.
///
/// p[v] is the length (in edges) of a longest path through v. c[v] is the
/// length of a longest cycle through v, or 2 when v lies on no cycle
/// (isolated vertices included). circ = max c, or 0 for the empty graph.
struct WeightTable {
    std::vector<int> p;
    std::vector<int> c;
    int circ = 0;
};

/// Per-edge localized weights, in Graph::edges() order.
///
/// k: order of a largest clique containing the edge. l: length of a longest
/// path containing the edge. w: length of a longest cycle containing the
/// edge, or 2 for bridges.
struct EdgeWeight {
    Edge edge;
    int k = 2;
    int l = 1;
    int w = 2;
};

struct EdgeWeightTable {
    std::vector<EdgeWeight> edges;
};

/// Longest path starting at v0; ties go to the lexicographically smallest sequence.
/// Throws CapExceeded when g.order() > limits.max_n.
VPath longest_path_from(const Graph& g, Vertex v0, const SearchLimits& limits = {});

WeightTable vertex_weights(const Graph& g, const SearchLimits& limits = {});

EdgeWeightTable edge_weights(const Graph& g, const SearchLimits& limits = {});

/// Longest cycle length, 2 for a nonempty acyclic graph. Throws std::invalid_argument when n = 0.
int circumference(const Graph& g, const SearchLimits& limits = {});

/// Order of a largest clique containing both a and b (a ~ b).
int max_clique_through(const Graph& g, Vertex a, Vertex b);

/// Throws CapExceeded if g is too large for the exact kernels.
void require_exact_cap(const Graph& g, const SearchLimits& limits);

}  // namespace eglocal
