#pragma once

// Hamiltonian-path tables over vertex subsets, shared by the exact kernels.

#include <cstdint>
#include <vector>

#include "eglocal/graph.hpp"

namespace eglocal::detail {

/// For every subset M of V (as a bitmask):
///   ends[M]     - vertices e such that G[M] has a Hamiltonian path ending at e;
///   low_ends[M] - the same, restricted to paths starting at the lowest vertex of M.
/// G[M] has a cycle through all of M iff |M| >= 3 and low_ends[M] meets N(lowest(M)).
struct HamTables {
    int n = 0;
    std::vector<std::uint32_t> ends;
    std::vector<std::uint32_t> low_ends;

    bool has_path(std::uint32_t mask) const { return ends[mask] != 0; }
    bool has_cycle(const Graph& g, std::uint32_t mask) const;
};

/// Fills both tables; n must be <= 30.
void build_ham_tables(const Graph& g, HamTables& out);

/// ends of Hamiltonian paths of G[M] that start at `start`, for M containing start.
void build_paths_from(const Graph& g, Vertex start, std::vector<std::uint32_t>& out);

}  // namespace eglocal::detail
