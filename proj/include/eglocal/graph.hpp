#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <vector>

namespace eglocal {

using Vertex = int;

/// Set of vertex ids in [0, 64) packed into one machine word.
class VertexSet {
public:
    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet of(std::initializer_list<Vertex> vs) {
        VertexSet s;
        for (Vertex v : vs) s.insert(v);
        return s;
    }
    static constexpr VertexSet single(Vertex v) { return VertexSet{std::uint64_t{1} << v}; }
    /// {0, .., n-1}
    static constexpr VertexSet range(int n) {
        return VertexSet{n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
    }

    constexpr std::uint64_t bits() const { return bits_; }
    constexpr bool contains(Vertex v) const { return (bits_ >> v) & 1U; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr int size() const { return std::popcount(bits_); }
    constexpr Vertex lowest() const { return std::countr_zero(bits_); }

    constexpr void insert(Vertex v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(Vertex v) { bits_ &= ~(std::uint64_t{1} << v); }

    constexpr VertexSet operator|(VertexSet o) const { return VertexSet{bits_ | o.bits_}; }
    constexpr VertexSet operator&(VertexSet o) const { return VertexSet{bits_ & o.bits_}; }
    constexpr VertexSet operator-(VertexSet o) const { return VertexSet{bits_ & ~o.bits_}; }
    constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    constexpr VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }
    constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr auto operator<=>(const VertexSet&) const = default;

    class iterator {
    public:
        using value_type = Vertex;
        using difference_type = std::ptrdiff_t;
        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
        constexpr Vertex operator*() const { return std::countr_zero(rest_); }
        constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        constexpr iterator operator++(int) { auto t = *this; ++*this; return t; }
        constexpr bool operator==(const iterator&) const = default;
    private:
        std::uint64_t rest_ = 0;
    };
    constexpr iterator begin() const { return iterator{bits_}; }
    constexpr iterator end() const { return iterator{0}; }

    std::vector<Vertex> to_vector() const { return {begin(), end()}; }

private:
    std::uint64_t bits_ = 0;
};

struct Edge {
    Vertex u = 0;
    Vertex v = 0;  // u < v
    auto operator<=>(const Edge&) const = default;
};

/// Immutable simple undirected graph on vertices 0..n-1, n <= 64.
class Graph {
public:
    static constexpr int kMaxVertices = 64;

    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);
    /// Throws std::invalid_argument on loops or out-of-range endpoints; duplicates are merged.
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    /// Builds from adjacency rows; rows must be symmetric and loop-free.
    static Graph from_rows(int n, std::span<const std::uint64_t> rows);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::range(n_); }
    VertexSet neighbors(Vertex v) const { check(v); return VertexSet{adj_[v]}; }
    int degree(Vertex v) const { check(v); return std::popcount(adj_[v]); }
    bool adjacent(Vertex a, Vertex b) const { check(a); check(b); return (adj_[a] >> b) & 1U; }
    int edge_count() const;
    std::vector<Edge> edges() const;

    /// Unchecked row access for hot loops.
    std::uint64_t row(Vertex v) const { return adj_[v]; }

    bool operator==(const Graph& o) const;

private:
    void check(Vertex v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex id out of range");
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxVertices> adj_{};
};

/// A graph derived from another, with the id of each new vertex in the source graph.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> to_source;
};

/// Induced subgraph on V \ removed, ids compacted in increasing order.
Subgraph delete_vertices(const Graph& g, VertexSet removed);
/// Drops every degree-0 vertex.
Subgraph remove_isolated(const Graph& g);
/// Induced subgraph on `keep`, ids compacted in increasing order.
Subgraph induced(const Graph& g, VertexSet keep);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);
/// Vertices reachable from v (including v) without entering `blocked`.
VertexSet reachable_from(const Graph& g, Vertex v, VertexSet blocked = {});

}  // namespace eglocal
