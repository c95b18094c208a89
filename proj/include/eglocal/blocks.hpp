#pragma once

#include <optional>
#include <vector>

#include "eglocal/graph.hpp"

namespace eglocal {

/// Blocks (maximal 2-connected pieces, bridges, isolated vertices) of a graph.
///
/// Blocks are sorted by (lowest vertex, vertex set). Every edge lies in
/// exactly one block and two blocks share at most one vertex. An isolated
/// vertex is its own block of order 1.
struct BlockDecomposition {
    std::vector<VertexSet> blocks;
    std::vector<int> orders;
    std::vector<bool> block_is_clique;
    VertexSet cut_vertices;
    /// Indices of blocks sharing a vertex with each block.
    std::vector<std::vector<int>> block_adjacency;

    bool connected = true;
    /// Connected and every block is a clique.
    bool is_block_graph = false;
    bool is_parent_dominated = false;
    /// Root block of a witnessing rooting, when parent-dominated.
    std::optional<int> witness_root;
    /// parent[b] under the witness rooting (-1 for the root); empty when there is no witness.
    std::vector<int> parent;
};

BlockDecomposition decompose(const Graph& g);

struct ParentDomination {
    bool holds = false;
    std::optional<int> root;
    std::vector<int> parent;
};

/// Tries every maximum-order block as root of the block-cut tree and accepts
/// the first rooting under which no block is larger than its parent block.
ParentDomination is_parent_dominated(const BlockDecomposition& d);

/// Block orders in block order.
std::vector<int> order_profile(const BlockDecomposition& d);

/// Blocks containing v.
std::vector<int> blocks_containing(const BlockDecomposition& d, Vertex v);

}  // namespace eglocal
