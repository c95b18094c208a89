#include "eglocal/path.hpp"

#include <stdexcept>

namespace eglocal {

VPath::VPath(std::vector<Vertex> seq) : seq_(std::move(seq)) {
    for (Vertex v : seq_) {
        if (v < 0 || v >= Graph::kMaxVertices) throw std::invalid_argument("path vertex out of range");
        if (set_.contains(v)) throw std::invalid_argument("path repeats a vertex");
        set_.insert(v);
    }
}

int VPath::index_of(Vertex v) const {
    if (!set_.contains(v)) return -1;
    for (int i = 0; i < vertex_count(); ++i)
        if (seq_[i] == v) return i;
    return -1;
}

int VPath::dist(Vertex x, Vertex y) const {
    const int i = index_of(x);
    const int j = index_of(y);
    if (i < 0 || j < 0) throw std::invalid_argument("dist: vertex not on path");
    return i > j ? i - j : j - i;
}

std::optional<Vertex> VPath::pred(Vertex x, int i) const {
    const int at = index_of(x);
    if (at < 0 || i < 0 || at - i < 0) return std::nullopt;
    return seq_[at - i];
}

std::optional<Vertex> VPath::succ(Vertex x, int j) const {
    const int at = index_of(x);
    if (at < 0 || j < 0 || at + j >= vertex_count()) return std::nullopt;
    return seq_[at + j];
}

VPath VPath::slice(int from, int to) const {
    std::vector<Vertex> out;
    if (from <= to) {
        for (int i = from; i <= to; ++i) out.push_back(seq_.at(i));
    } else {
        for (int i = from; i >= to; --i) out.push_back(seq_.at(i));
    }
    return VPath(std::move(out));
}

bool VPath::is_path_in(const Graph& g) const {
    if (seq_.empty() || set_.size() != vertex_count()) return false;
    for (Vertex v : seq_)
        if (v >= g.order()) return false;
    for (int i = 0; i + 1 < vertex_count(); ++i)
        if (!g.adjacent(seq_[i], seq_[i + 1])) return false;
    return true;
}

std::string VPath::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < seq_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(seq_[i]);
    }
    return s;
}

}  // namespace eglocal
