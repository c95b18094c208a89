#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "eglocal/graph.hpp"

namespace eglocal {

/// A simple path read from its origin seq[0] towards its terminal seq.back().
class VPath {
public:
    VPath() = default;
    explicit VPath(std::vector<Vertex> seq);

    const std::vector<Vertex>& seq() const { return seq_; }
    Vertex origin() const { return seq_.front(); }
    Vertex terminal() const { return seq_.back(); }
    /// Number of edges.
    int length() const { return static_cast<int>(seq_.size()) - 1; }
    int vertex_count() const { return static_cast<int>(seq_.size()); }
    bool empty() const { return seq_.empty(); }
    Vertex operator[](int i) const { return seq_[i]; }

    VertexSet vertex_set() const { return set_; }
    bool contains(Vertex v) const { return set_.contains(v); }
    /// Position of v, or -1.
    int index_of(Vertex v) const;

    /// Number of path edges between x and y.
    int dist(Vertex x, Vertex y) const;
    /// The vertex i steps before x (towards the origin), if any.
    std::optional<Vertex> pred(Vertex x, int i) const;
    /// The vertex j steps after x (towards the terminal), if any.
    std::optional<Vertex> succ(Vertex x, int j) const;

    /// Sub-path between positions [from, to] inclusive, read in the given direction.
    VPath slice(int from, int to) const;

    /// True iff consecutive vertices are adjacent in g and no vertex repeats.
    bool is_path_in(const Graph& g) const;

    std::string to_string() const;

    auto operator<=>(const VPath& o) const { return seq_ <=> o.seq_; }
    bool operator==(const VPath& o) const { return seq_ == o.seq_; }

private:
    std::vector<Vertex> seq_;
    VertexSet set_;
};

}  // namespace eglocal
