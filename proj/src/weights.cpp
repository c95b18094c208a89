#include "eglocal/weights.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "eglocal/detail/subset_dp.hpp"

namespace eglocal {

namespace {

constexpr int kHardCap = 30;

detail::HamTables& scratch_tables() {
    thread_local detail::HamTables tables;
    return tables;
}

// Lexicographically first extension of `seq` to `target` vertices. `dead`
// memoizes (vertex set, endpoint) states known not to complete.
bool extend_lex(const Graph& g, std::vector<Vertex>& seq, std::uint32_t used, int target,
                std::vector<std::uint32_t>& dead) {
    if (static_cast<int>(seq.size()) == target) return true;
    const Vertex x = seq.back();
    for (Vertex y : VertexSet{g.row(x) & ~static_cast<std::uint64_t>(used)}) {
        const std::uint32_t next = used | (std::uint32_t{1} << y);
        if ((dead[next] >> y) & 1U) continue;
        seq.push_back(y);
        if (extend_lex(g, seq, next, target, dead)) return true;
        seq.pop_back();
        dead[next] |= std::uint32_t{1} << y;
    }
    return false;
}

int max_clique_in(const Graph& g, VertexSet candidates) {
    if (candidates.empty()) return 0;
    int best = 0;
    // Branch on the lowest candidate: either it is in the clique or not.
    VertexSet rest = candidates;
    while (!rest.empty()) {
        if (best >= rest.size()) break;
        const Vertex v = rest.lowest();
        rest.erase(v);
        best = std::max(best, 1 + max_clique_in(g, rest & g.neighbors(v)));
    }
    return best;
}

}  // namespace

void require_exact_cap(const Graph& g, const SearchLimits& limits) {
    const int cap = std::min(limits.max_n, kHardCap);
    if (g.order() > cap)
        throw CapExceeded("graph has " + std::to_string(g.order()) +
                          " vertices; exact search is capped at " + std::to_string(cap));
}

VPath longest_path_from(const Graph& g, Vertex v0, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    if (v0 < 0 || v0 >= g.order()) throw std::out_of_range("longest_path_from: vertex out of range");

    auto& tables = scratch_tables();
    detail::build_ham_tables(g, tables);
    const std::uint32_t size = std::uint32_t{1} << g.order();
    int target = 1;
    for (std::uint32_t mask = 1; mask < size; ++mask)
        if ((tables.ends[mask] >> v0) & 1U) target = std::max(target, std::popcount(mask));

    std::vector<std::uint32_t> dead(size, 0);
    std::vector<Vertex> seq{v0};
    seq.reserve(target);
    extend_lex(g, seq, std::uint32_t{1} << v0, target, dead);
    return VPath(std::move(seq));
}

WeightTable vertex_weights(const Graph& g, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    const int n = g.order();
    WeightTable out;
    out.p.assign(n, 0);
    out.c.assign(n, 2);
    if (n == 0) return out;

    auto& tables = scratch_tables();
    detail::build_ham_tables(g, tables);
    const std::uint32_t size = std::uint32_t{1} << n;
    for (std::uint32_t mask = 1; mask < size; ++mask) {
        if (!tables.ends[mask]) continue;
        const int k = std::popcount(mask);
        const bool cycle = tables.has_cycle(g, mask);
        for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
            const int v = std::countr_zero(bits);
            if (out.p[v] < k - 1) out.p[v] = k - 1;
            if (cycle && out.c[v] < k) out.c[v] = k;
        }
    }
    out.circ = *std::max_element(out.c.begin(), out.c.end());
    return out;
}

int max_clique_through(const Graph& g, Vertex a, Vertex b) {
    if (!g.adjacent(a, b)) throw std::invalid_argument("max_clique_through: not an edge");
    return 2 + max_clique_in(g, g.neighbors(a) & g.neighbors(b));
}

EdgeWeightTable edge_weights(const Graph& g, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    const int n = g.order();
    EdgeWeightTable out;
    if (n == 0) return out;

    auto& tables = scratch_tables();
    detail::build_ham_tables(g, tables);
    const std::uint32_t size = std::uint32_t{1} << n;

    std::vector<std::uint32_t> from_a;
    std::vector<std::uint32_t> through;  // ends of Hamiltonian paths of G[M] using edge ab
    Vertex loaded = -1;
    for (const Edge& e : g.edges()) {
        const Vertex a = e.u;
        const Vertex b = e.v;
        EdgeWeight ew{e, max_clique_through(g, a, b), 1, 2};

        if (loaded != a) {
            detail::build_paths_from(g, a, from_a);
            loaded = a;
        }
        const std::uint32_t abit = std::uint32_t{1} << a;
        const std::uint32_t bbit = std::uint32_t{1} << b;
        for (std::uint32_t mask = 0; mask < size; ++mask) {
            if ((mask & abit) && (from_a[mask] & bbit)) {
                const int k = std::popcount(mask);
                if (k >= 3) ew.w = std::max(ew.w, k);
            }
        }

        through.assign(size, 0);
        for (std::uint32_t mask = 1; mask < size; ++mask) {
            if ((mask & (abit | bbit)) != (abit | bbit)) continue;
            std::uint32_t ends = 0;
            for (std::uint32_t bits = mask; bits; bits &= bits - 1) {
                const int x = std::countr_zero(bits);
                const std::uint32_t xbit = std::uint32_t{1} << x;
                const std::uint32_t rest = mask ^ xbit;
                if (through[rest] & static_cast<std::uint32_t>(g.row(x))) ends |= xbit;
                else if (x == a && (tables.ends[rest] & bbit)) ends |= xbit;
                else if (x == b && (tables.ends[rest] & abit)) ends |= xbit;
            }
            through[mask] = ends;
            if (ends) ew.l = std::max(ew.l, std::popcount(mask) - 1);
        }
        out.edges.push_back(ew);
    }
    return out;
}

int circumference(const Graph& g, const SearchLimits& limits) {
    if (g.order() == 0) throw std::invalid_argument("circumference is undefined for the empty graph");
    return vertex_weights(g, limits).circ;
}

}  // namespace eglocal
