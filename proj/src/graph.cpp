#include "eglocal/graph.hpp"

#include <string>

namespace eglocal {

namespace {

void check_order(int n) {
    if (n < 0 || n > Graph::kMaxVertices)
        throw std::invalid_argument("vertex count " + std::to_string(n) + " outside [0, 64]");
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) {
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("self-loop");
        adj_[e.u] |= std::uint64_t{1} << e.v;
        adj_[e.v] |= std::uint64_t{1} << e.u;
    }
}

Graph Graph::from_rows(int n, std::span<const std::uint64_t> rows) {
    Graph g(n);
    if (static_cast<int>(rows.size()) < n) throw std::invalid_argument("too few adjacency rows");
    const std::uint64_t all = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~all) throw std::invalid_argument("adjacency row out of range");
        if ((rows[v] >> v) & 1U) throw std::invalid_argument("self-loop");
        g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
        for (Vertex w : VertexSet{rows[v]})
            if (!((rows[w] >> v) & 1U)) throw std::invalid_argument("asymmetric adjacency");
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int v = 0; v < n_; ++v)
        for (Vertex w : VertexSet{adj_[v] & ~VertexSet::range(v + 1).bits()}) out.push_back({v, w});
    return out;
}

bool Graph::operator==(const Graph& o) const {
    if (n_ != o.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != o.adj_[v]) return false;
    return true;
}

Subgraph induced(const Graph& g, VertexSet keep) {
    keep &= g.vertices();
    Subgraph out;
    out.to_source = keep.to_vector();
    const int k = static_cast<int>(out.to_source.size());
    std::array<int, Graph::kMaxVertices> to_new{};
    for (int i = 0; i < k; ++i) to_new[out.to_source[i]] = i;
    std::array<std::uint64_t, Graph::kMaxVertices> rows{};
    for (int i = 0; i < k; ++i)
        for (Vertex w : g.neighbors(out.to_source[i]) & keep)
            rows[i] |= std::uint64_t{1} << to_new[w];
    out.graph = Graph::from_rows(k, std::span(rows).first(k));
    return out;
}

Subgraph delete_vertices(const Graph& g, VertexSet removed) {
    return induced(g, g.vertices() - removed);
}

Subgraph remove_isolated(const Graph& g) {
    VertexSet keep;
    for (Vertex v : g.vertices())
        if (g.row(v) != 0) keep.insert(v);
    return induced(g, keep);
}

VertexSet reachable_from(const Graph& g, Vertex v, VertexSet blocked) {
    VertexSet seen = VertexSet::single(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (Vertex x : frontier) next |= g.neighbors(x);
        next -= seen;
        next -= blocked;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = reachable_from(g, left.lowest());
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, VertexSet s) {
    for (Vertex v : s)
        if (!(s - VertexSet::single(v)).subset_of(g.neighbors(v))) return false;
    return true;
}

}  // namespace eglocal
