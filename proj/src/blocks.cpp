#include "eglocal/blocks.hpp"

#include <algorithm>
#include <deque>

namespace eglocal {

namespace {

// Hopcroft-Tarjan lowpoint DFS collecting biconnected components from an edge stack.
class BlockFinder {
public:
    explicit BlockFinder(const Graph& g) : g_(g) {
        disc_.fill(-1);
        low_.fill(0);
    }

    std::vector<VertexSet> run() {
        for (Vertex v : g_.vertices()) {
            if (disc_[v] >= 0) continue;
            if (g_.row(v) == 0) {
                disc_[v] = timer_++;
                blocks_.push_back(VertexSet::single(v));
                continue;
            }
            dfs(v, -1);
        }
        return std::move(blocks_);
    }

private:
    void dfs(Vertex v, Vertex parent) {
        disc_[v] = low_[v] = timer_++;
        for (Vertex w : g_.neighbors(v)) {
            if (w == parent) continue;
            if (disc_[w] < 0) {
                stack_.push_back({v, w});
                dfs(w, v);
                low_[v] = std::min(low_[v], low_[w]);
                if (low_[w] >= disc_[v]) pop_block({v, w});
            } else if (disc_[w] < disc_[v]) {
                stack_.push_back({v, w});
                low_[v] = std::min(low_[v], disc_[w]);
            }
        }
    }

    void pop_block(Edge until) {
        VertexSet block;
        while (true) {
            const Edge e = stack_.back();
            stack_.pop_back();
            block.insert(e.u);
            block.insert(e.v);
            if (e.u == until.u && e.v == until.v) break;
        }
        blocks_.push_back(block);
    }

    const Graph& g_;
    std::array<int, Graph::kMaxVertices> disc_{};
    std::array<int, Graph::kMaxVertices> low_{};
    int timer_ = 0;
    std::vector<Edge> stack_;  // (u, v) in DFS direction, not normalized
    std::vector<VertexSet> blocks_;
};

}  // namespace

BlockDecomposition decompose(const Graph& g) {
    BlockDecomposition d;
    d.blocks = BlockFinder(g).run();
    std::sort(d.blocks.begin(), d.blocks.end(), [](VertexSet a, VertexSet b) {
        if (a.lowest() != b.lowest()) return a.lowest() < b.lowest();
        return a.bits() < b.bits();
    });

    const int nb = static_cast<int>(d.blocks.size());
    std::array<int, Graph::kMaxVertices> membership{};
    for (int i = 0; i < nb; ++i) {
        d.orders.push_back(d.blocks[i].size());
        d.block_is_clique.push_back(is_clique(g, d.blocks[i]));
        for (Vertex v : d.blocks[i]) ++membership[v];
    }
    for (Vertex v : g.vertices())
        if (membership[v] > 1) d.cut_vertices.insert(v);

    d.block_adjacency.assign(nb, {});
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            if (i != j && d.blocks[i].intersects(d.blocks[j])) d.block_adjacency[i].push_back(j);

    d.connected = is_connected(g);
    d.is_block_graph =
        d.connected && std::all_of(d.block_is_clique.begin(), d.block_is_clique.end(), [](bool b) { return b; });

    const ParentDomination pd = is_parent_dominated(d);
    d.is_parent_dominated = pd.holds;
    d.witness_root = pd.root;
    d.parent = pd.parent;
    return d;
}

ParentDomination is_parent_dominated(const BlockDecomposition& d) {
    ParentDomination out;
    if (!d.is_block_graph) return out;
    const int nb = static_cast<int>(d.blocks.size());
    if (nb == 0) {
        out.holds = true;
        return out;
    }
    const int max_order = *std::max_element(d.orders.begin(), d.orders.end());

    for (int root = 0; root < nb; ++root) {
        if (d.orders[root] != max_order) continue;
        // Walk the block-cut tree: a block's children hang off its cut vertices
        // other than the one joining it to its own parent.
        std::vector<int> parent(nb, -2);
        parent[root] = -1;
        VertexSet expanded;  // cut vertices already used as attachment points
        std::deque<int> queue{root};
        bool ok = true;
        while (!queue.empty() && ok) {
            const int b = queue.front();
            queue.pop_front();
            for (Vertex w : d.blocks[b] & d.cut_vertices) {
                if (expanded.contains(w)) continue;
                expanded.insert(w);
                for (int child : d.block_adjacency[b]) {
                    if (parent[child] != -2 || !d.blocks[child].contains(w)) continue;
                    parent[child] = b;
                    if (d.orders[child] > d.orders[b]) ok = false;
                    queue.push_back(child);
                }
            }
        }
        if (ok) {
            out.holds = true;
            out.root = root;
            out.parent = std::move(parent);
            return out;
        }
    }
    return out;
}

std::vector<int> order_profile(const BlockDecomposition& d) { return d.orders; }

std::vector<int> blocks_containing(const BlockDecomposition& d, Vertex v) {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(d.blocks.size()); ++i)
        if (d.blocks[i].contains(v)) out.push_back(i);
    return out;
}

}  // namespace eglocal
