#pragma once

// Rotation machinery on longest origin-anchored paths.
//
// A simple transform of P = v0 .. vk, where vk ~ vj and j <= k-2, is
// v0 .. vj vk vk-1 .. vj+1. The closure of P is everything reachable by
// repeated simple transforms; all closure paths share P's vertex set.

#include <optional>
#include <utility>
#include <vector>

#include "eglocal/errors.hpp"
#include "eglocal/graph.hpp"
#include "eglocal/path.hpp"
#include "eglocal/weights.hpp"

namespace eglocal {

/// One output per neighbor vj (j <= k-2) of the terminal, ordered by j.
std::vector<VPath> simple_transforms(const Graph& g, const VPath& p);

/// Terminal-vertex sets of a closure, without the path bundle.
struct TerminalSets {
    VertexSet terminals;           // terminals of closure paths
    VertexSet off_path_twins;      // off-path vertices sharing N(.) with a terminal
    VertexSet extended;            // terminals | off_path_twins
    std::vector<Vertex> twin_of;   // twin_of[v] for v in off_path_twins, else -1
};

/// The full transform closure of a longest origin path.
struct Closure {
    Graph graph;
    VPath origin_path;
    std::vector<VPath> paths;      // lexicographically sorted
    TerminalSets sets;
    std::vector<int> weight;       // c(.) in `graph`
    /// pivot[v]: the vertex c(v)-1 steps before v on its closure paths (v in sets.extended); -1 otherwise.
    std::vector<Vertex> pivot;
    /// outside_neighbors[v] = N(v) minus terminals, for v in sets.extended.
    std::vector<VertexSet> outside_neighbors;
    int min_weight = 0;            // min c over sets.extended
    int prefix_len = 0;            // |V(P)| - min_weight + 1

    const VertexSet& terminals() const { return sets.terminals; }
    const VertexSet& off_path_twins() const { return sets.off_path_twins; }
    const VertexSet& extended() const { return sets.extended; }
};

/// BFS over simple transforms to a fixpoint. `p` must be a longest path from
/// its origin (checked). Throws CapExceeded when more than limits.closure_cap
/// paths are reached.
Closure closure(const Graph& g, const VPath& p, const WeightTable& weights,
                const SearchLimits& limits = {});
Closure closure(const Graph& g, const VPath& p, const SearchLimits& limits = {});

/// Same terminal sets as closure(), without materializing the paths. The
/// search stops as soon as every vertex that could possibly be a terminal
/// (a Hamiltonian-path end from the origin in G[V(P)] with N(.) inside V(P))
/// has been seen.
TerminalSets closure_terminals(const Graph& g, const VPath& p, const SearchLimits& limits = {});

/// Closure paths ending at v; for an off-path twin v, its twin's paths with the twin replaced by v.
std::vector<VPath> transforms_ending_at(const Closure& c, Vertex v);

struct Segments {
    Vertex pivot = -1;
    std::vector<Vertex> front;       // before the pivot
    std::vector<Vertex> front_star;  // up to and including the pivot
    std::vector<Vertex> back;        // after the pivot
    std::vector<Vertex> back_star;   // from the pivot to the terminal
};

/// Splits pv at pivot = the vertex cv-1 steps before the terminal v.
Segments segments(const VPath& pv, Vertex v, int cv);

/// Successors on pv of the on-path neighbors of v.
VertexSet n_plus(const VPath& pv, Vertex v, const Graph& g);
/// back_star vertices that are neither neighbors of v nor in n_plus.
VertexSet holes(const VPath& pv, Vertex v, const Graph& g, int cv);

/// True iff the terminal has no neighbor in the prefix ending min_weight steps before it.
bool is_good(const Closure& c, const VPath& pv);

/// Lexicographically smallest (t1, t2) off p with x - t1 - t2 a path.
std::optional<std::pair<Vertex, Vertex>> two_branch_at(const Graph& g, const VPath& p, Vertex x);

}  // namespace eglocal
