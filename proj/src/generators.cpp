#include "eglocal/generators.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace eglocal {

std::uint64_t SplitMix64::next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("SplitMix64::below: bound is 0");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
        x = next();
    } while (x >= limit);
    return x % bound;
}

double SplitMix64::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

void check_order(int n, const char* who) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument(std::string(who) + ": vertex count out of range");
}

// graph6 pair order: column v ascending, then row u < v.
std::vector<Edge> pair_order(int n) {
    std::vector<Edge> pairs;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) pairs.push_back({u, v});
    return pairs;
}

}  // namespace

Graph gen_clique_union(const std::vector<int>& orders) {
    int n = 0;
    for (int o : orders) {
        if (o < 1) throw std::invalid_argument("gen_clique_union: orders must be >= 1");
        n += o;
    }
    check_order(n, "gen_clique_union");
    std::vector<Edge> edges;
    int base = 0;
    for (int o : orders) {
        for (int a = base; a < base + o; ++a)
            for (int b = a + 1; b < base + o; ++b) edges.push_back({a, b});
        base += o;
    }
    return Graph(n, edges);
}

Graph gen_block_graph(const BlockPlan& plan) {
    if (plan.blocks.empty()) throw std::invalid_argument("gen_block_graph: plan has no blocks");
    std::vector<std::vector<Vertex>> members;
    std::vector<Edge> edges;
    int n = 0;
    for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
        const BlockPlan::Block& b = plan.blocks[i];
        if (b.order < 2) throw std::invalid_argument("gen_block_graph: block orders must be >= 2");
        std::vector<Vertex> vs;
        if (i == 0) {
            if (b.parent != -1) throw std::invalid_argument("gen_block_graph: root block has a parent");
        } else {
            if (b.parent < 0 || b.parent >= static_cast<int>(i))
                throw std::invalid_argument("gen_block_graph: block " + std::to_string(i) + " has no earlier parent");
            const BlockPlan::Block& parent = plan.blocks[b.parent];
            if (b.attach_slot < 0 || b.attach_slot >= parent.order)
                throw std::invalid_argument("gen_block_graph: attachment slot out of range");
            if (b.parent != 0 && b.attach_slot == 0)
                throw std::invalid_argument("gen_block_graph: slot 0 of a non-root block is its own cut vertex");
            if (plan.parent_dominated && b.order > parent.order)
                throw std::invalid_argument("gen_block_graph: child block larger than its parent");
            vs.push_back(members[b.parent][b.attach_slot]);
        }
        while (static_cast<int>(vs.size()) < b.order) vs.push_back(n++);
        check_order(n, "gen_block_graph");
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t c = a + 1; c < vs.size(); ++c) edges.push_back({std::min(vs[a], vs[c]), std::max(vs[a], vs[c])});
        members.push_back(std::move(vs));
    }
    return Graph(n, edges);
}

BlockPlan random_parent_dominated_plan(std::uint64_t seed, int n_blocks, int max_order) {
    if (n_blocks < 1 || max_order < 2) throw std::invalid_argument("gen_parent_dominated: need n_blocks >= 1, max_order >= 2");
    SplitMix64 rng(seed);
    BlockPlan plan;
    plan.parent_dominated = true;
    plan.blocks.push_back({2 + static_cast<int>(rng.below(max_order - 1)), -1, 0});
    for (int i = 1; i < n_blocks; ++i) {
        const int parent = static_cast<int>(rng.below(i));
        const int porder = plan.blocks[parent].order;
        const int order = 2 + static_cast<int>(rng.below(porder - 1));
        const int first_slot = parent == 0 ? 0 : 1;
        const int slot = first_slot + static_cast<int>(rng.below(porder - first_slot));
        plan.blocks.push_back({order, parent, slot});
    }
    return plan;
}

Graph gen_parent_dominated(std::uint64_t seed, int n_blocks, int max_order) {
    return gen_block_graph(random_parent_dominated_plan(seed, n_blocks, max_order));
}

Graph gen_gnp(int n, double p, std::uint64_t seed) {
    check_order(n, "gen_gnp");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("gen_gnp: p must lie in [0, 1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph gen_gnm(int n, int m, std::uint64_t seed) {
    check_order(n, "gen_gnm");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    if (m < 0 || m > static_cast<int>(pairs.size())) throw std::invalid_argument("gen_gnm: m out of range");
    SplitMix64 rng(seed);
    for (int i = 0; i < m; ++i) {
        const std::size_t j = i + rng.below(pairs.size() - i);
        std::swap(pairs[i], pairs[j]);
    }
    pairs.resize(m);
    return Graph(n, pairs);
}

Graph turan(int n, int r) {
    check_order(n, "turan");
    if (r < 1) throw std::invalid_argument("turan: r must be >= 1");
    std::vector<int> part(n);
    int v = 0;
    for (int i = 0; i < r; ++i) {
        const int size = n / r + (i < n % r ? 1 : 0);
        for (int j = 0; j < size; ++j) part[v++] = i;
    }
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (part[a] != part[b]) edges.push_back({a, b});
    return Graph(n, edges);
}

Graph path_graph(int n) {
    check_order(n, "path_graph");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    check_order(n, "cycle_graph");
    if (n < 3) throw std::invalid_argument("cycle_graph: n must be >= 3");
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.push_back({v, v + 1});
    edges.push_back({0, n - 1});
    return Graph(n, edges);
}

Graph star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star: negative leaf count");
    check_order(leaves + 1, "star");
    std::vector<Edge> edges;
    for (int v = 1; v <= leaves; ++v) edges.push_back({0, v});
    return Graph(leaves + 1, edges);
}

std::uint64_t labeled_count(int n) {
    if (n < 0 || n > 7) throw std::invalid_argument("enumerate_labeled: n must lie in 0..7; use graph6 corpus files beyond");
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph labeled_graph(int n, std::uint64_t index) {
    if (index >= labeled_count(n)) throw std::invalid_argument("labeled_graph: index out of range");
    const std::vector<Edge> pairs = pair_order(n);
    std::vector<Edge> edges;
    for (std::size_t j = 0; j < pairs.size(); ++j)
        if ((index >> j) & 1U) edges.push_back(pairs[j]);
    return Graph(n, edges);
}

std::vector<Graph> enumerate_labeled(int n) {
    const std::uint64_t count = labeled_count(n);
    std::vector<Graph> out;
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(labeled_graph(n, i));
    return out;
}

}  // namespace eglocal
