#pragma once

#include <cstdint>
#include <vector>

#include "eglocal/graph.hpp"

namespace eglocal {

/// splitmix64 (Steele, Lea, Flood 2014): state += 0x9E3779B97F4A7C15, then
/// z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9; z = (z ^ (z >> 27)) * 0x94D049BB133111EB; z ^ (z >> 31).
/// Fixed here so seeded corpora are reproducible anywhere.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next();
    /// Uniform in [0, bound) by rejection; bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// Uniform in [0, 1) from the top 53 bits.
    double unit();

private:
    std::uint64_t state_;
};

/// Disjoint cliques of the given orders, numbered consecutively.
Graph gen_clique_union(const std::vector<int>& orders);

/// Blocks in creation order; block 0 is the root. Every other block names its
/// parent block (earlier in the list) and the slot of the parent it hangs from.
struct BlockPlan {
    struct Block {
        int order = 2;
        int parent = -1;
        int attach_slot = 0;   // index into the parent's vertices, 0..parent order-1
    };
    std::vector<Block> blocks;
    bool parent_dominated = false;  // require child order <= parent order
};

/// Realizes the plan. Root vertices take ids 0..b0-1; each child adds b-1 new
/// vertices after the attachment vertex. Throws std::invalid_argument on an
/// inconsistent plan.
Graph gen_block_graph(const BlockPlan& plan);

/// Random plan with n_blocks blocks of orders in 2..max_order, realized.
Graph gen_parent_dominated(std::uint64_t seed, int n_blocks, int max_order);
BlockPlan random_parent_dominated_plan(std::uint64_t seed, int n_blocks, int max_order);

/// Each of the C(n,2) pairs, in (u, v) lexicographic order, kept with probability p.
Graph gen_gnp(int n, double p, std::uint64_t seed);
/// Exactly m distinct edges chosen uniformly.
Graph gen_gnm(int n, int m, std::uint64_t seed);

/// Complete r-partite graph, parts of sizes differing by at most 1 (larger parts first).
Graph turan(int n, int r);
Graph path_graph(int n);
Graph cycle_graph(int n);
/// Star with center 0 and `leaves` leaves.
Graph star(int leaves);

/// Labeled graphs on n <= 7 vertices: graph i has edge j (in graph6 pair order
/// (0,1), (0,2), (1,2), (0,3), ...) iff bit j of i is set.
std::uint64_t labeled_count(int n);
Graph labeled_graph(int n, std::uint64_t index);
std::vector<Graph> enumerate_labeled(int n);

}  // namespace eglocal
