#include "eglocal/rotation.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>

#include "eglocal/detail/subset_dp.hpp"

namespace eglocal {

namespace {

using Key = std::string;  // one byte per vertex id

Key key_of(const VPath& p) {
    Key k;
    k.reserve(p.vertex_count());
    for (Vertex v : p.seq()) k.push_back(static_cast<char>(v));
    return k;
}

VPath path_of(const Key& k) {
    std::vector<Vertex> seq(k.begin(), k.end());
    return VPath(std::move(seq));
}

// Appends the simple transforms of `s` to `out`, ordered by pivot position.
template <class Sink>
void for_each_transform(const Graph& g, const Key& s, Sink&& sink) {
    const int k = static_cast<int>(s.size()) - 1;
    if (k < 2) return;
    const Vertex t = static_cast<unsigned char>(s[k]);
    const std::uint64_t nbrs = g.row(t);
    Key next;
    for (int j = 0; j <= k - 2; ++j) {
        if (!((nbrs >> static_cast<unsigned char>(s[j])) & 1U)) continue;
        next.assign(s.begin(), s.begin() + j + 1);
        next.append(s.rbegin(), s.rend() - (j + 1));
        sink(next);
    }
}

// Breadth-first search over the rotation graph. `visit` returns false to stop.
template <class Visit>
void rotation_bfs(const Graph& g, const Key& start, std::size_t cap, Visit&& visit) {
    std::unordered_set<Key> seen{start};
    std::deque<Key> queue{start};
    while (!queue.empty()) {
        Key cur = std::move(queue.front());
        queue.pop_front();
        if (!visit(cur)) return;
        for_each_transform(g, cur, [&](const Key& next) {
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw CapExceeded("transform closure exceeds " + std::to_string(cap) + " paths");
                queue.push_back(next);
            }
        });
    }
}

void require_longest(const Graph& g, const VPath& p, const SearchLimits& limits) {
    if (p.empty() || !p.is_path_in(g)) throw std::invalid_argument("closure: not a path of the graph");
    const VPath best = longest_path_from(g, p.origin(), limits);
    if (best.length() != p.length())
        throw std::invalid_argument("closure: path " + p.to_string() + " is not a longest path from " +
                                    std::to_string(p.origin()));
}

TerminalSets finish_sets(const Graph& g, const VPath& p, VertexSet terminals) {
    TerminalSets out;
    out.terminals = terminals;
    out.twin_of.assign(g.order(), -1);
    for (Vertex v : g.vertices() - p.vertex_set()) {
        for (Vertex t : terminals) {
            if (g.row(v) == g.row(t)) {
                out.off_path_twins.insert(v);
                out.twin_of[v] = t;
                break;
            }
        }
    }
    out.extended = out.terminals | out.off_path_twins;
    return out;
}

// Vertices that can end a longest origin path inside V(P): Hamiltonian-path
// ends from the origin in G[V(P)] whose neighborhoods stay inside V(P).
VertexSet terminal_upper_bound(const Graph& g, const VPath& p) {
    if (p.length() == 0) return VertexSet::single(p.origin());
    const VertexSet span = p.vertex_set();
    const Subgraph sub = induced(g, span);
    int origin_local = 0;
    while (sub.to_source[origin_local] != p.origin()) ++origin_local;
    std::vector<std::uint32_t> from;
    detail::build_paths_from(sub.graph, origin_local, from);
    const std::uint32_t full = (std::uint32_t{1} << sub.graph.order()) - 1;
    VertexSet bound;
    for (Vertex local : VertexSet{from[full]}) {
        const Vertex v = sub.to_source[local];
        if (v != p.origin() && g.neighbors(v).subset_of(span)) bound.insert(v);
    }
    return bound;
}

}  // namespace

std::vector<VPath> simple_transforms(const Graph& g, const VPath& p) {
    std::vector<VPath> out;
    for_each_transform(g, key_of(p), [&](const Key& k) { out.push_back(path_of(k)); });
    return out;
}

Closure closure(const Graph& g, const VPath& p, const WeightTable& weights,
                const SearchLimits& limits) {
    require_longest(g, p, limits);
    if (static_cast<int>(weights.c.size()) != g.order())
        throw std::invalid_argument("closure: weight table does not match graph");

    Closure c;
    c.graph = g;
    c.origin_path = p;
    c.weight = weights.c;

    VertexSet terminals;
    std::vector<Key> keys;
    rotation_bfs(g, key_of(p), limits.closure_cap, [&](const Key& k) {
        terminals.insert(static_cast<unsigned char>(k.back()));
        keys.push_back(k);
        return true;
    });
    std::sort(keys.begin(), keys.end());
    c.paths.reserve(keys.size());
    for (const Key& k : keys) c.paths.push_back(path_of(k));

    c.sets = finish_sets(g, p, terminals);

    const int n = g.order();
    c.pivot.assign(n, -1);
    c.outside_neighbors.assign(n, VertexSet{});
    c.min_weight = 0;
    bool first = true;
    for (Vertex v : c.sets.extended) {
        c.outside_neighbors[v] = g.neighbors(v) - c.sets.terminals;
        const int cv = weights.c[v];
        if (first || cv < c.min_weight) c.min_weight = cv;
        first = false;
        const Vertex host = c.sets.terminals.contains(v) ? v : c.sets.twin_of[v];
        for (const VPath& q : c.paths) {
            if (q.terminal() != host) continue;
            if (auto w = q.pred(host, cv - 1)) c.pivot[v] = *w;
            break;
        }
    }
    c.prefix_len = p.vertex_count() - c.min_weight + 1;
    return c;
}

Closure closure(const Graph& g, const VPath& p, const SearchLimits& limits) {
    return closure(g, p, vertex_weights(g, limits), limits);
}

TerminalSets closure_terminals(const Graph& g, const VPath& p, const SearchLimits& limits) {
    require_longest(g, p, limits);
    const VertexSet bound = terminal_upper_bound(g, p);
    VertexSet terminals;
    rotation_bfs(g, key_of(p), limits.closure_cap, [&](const Key& k) {
        terminals.insert(static_cast<unsigned char>(k.back()));
        return terminals != bound;
    });
    return finish_sets(g, p, terminals);
}

std::vector<VPath> transforms_ending_at(const Closure& c, Vertex v) {
    if (v < 0 || v >= c.graph.order() || !c.sets.extended.contains(v))
        throw std::invalid_argument("transforms_ending_at: vertex is not a closure terminal or twin");
    std::vector<VPath> out;
    if (c.sets.terminals.contains(v)) {
        for (const VPath& q : c.paths)
            if (q.terminal() == v) out.push_back(q);
        return out;
    }
    const Vertex twin = c.sets.twin_of[v];
    for (const VPath& q : c.paths) {
        if (q.terminal() != twin) continue;
        std::vector<Vertex> seq = q.seq();
        seq.back() = v;
        out.emplace_back(std::move(seq));
    }
    return out;
}

Segments segments(const VPath& pv, Vertex v, int cv) {
    if (pv.empty() || pv.terminal() != v) throw std::invalid_argument("segments: v is not the terminal");
    if (cv < 2) throw std::invalid_argument("segments: weight below 2");
    const int at = pv.length() - (cv - 1);
    if (at < 0) throw std::invalid_argument("segments: path shorter than " + std::to_string(cv - 1) + " edges");
    Segments s;
    s.pivot = pv[at];
    const auto& seq = pv.seq();
    s.front.assign(seq.begin(), seq.begin() + at);
    s.front_star.assign(seq.begin(), seq.begin() + at + 1);
    s.back.assign(seq.begin() + at + 1, seq.end());
    s.back_star.assign(seq.begin() + at, seq.end());
    return s;
}

VertexSet n_plus(const VPath& pv, Vertex v, const Graph& g) {
    VertexSet out;
    for (Vertex x : g.neighbors(v))
        if (auto s = pv.succ(x, 1)) out.insert(*s);
    return out;
}

VertexSet holes(const VPath& pv, Vertex v, const Graph& g, int cv) {
    const Segments s = segments(pv, v, cv);
    const VertexSet covered = g.neighbors(v) | n_plus(pv, v, g);
    VertexSet out;
    for (Vertex x : s.back_star)
        if (!covered.contains(x)) out.insert(x);
    return out;
}

bool is_good(const Closure& c, const VPath& pv) {
    const Vertex t = pv.terminal();
    const int last = pv.length() - c.min_weight;  // index of the vertex min_weight steps back
    const VertexSet nbrs = c.graph.neighbors(t);
    for (int i = 0; i <= last; ++i)
        if (nbrs.contains(pv[i])) return false;
    return true;
}

std::optional<std::pair<Vertex, Vertex>> two_branch_at(const Graph& g, const VPath& p, Vertex x) {
    if (!p.contains(x)) throw std::invalid_argument("two_branch_at: vertex not on path");
    const VertexSet off = g.vertices() - p.vertex_set();
    for (Vertex t1 : g.neighbors(x) & off) {
        const VertexSet second = g.neighbors(t1) & off;
        if (!second.empty()) return std::make_pair(t1, second.lowest());
    }
    return std::nullopt;
}

}  // namespace eglocal
