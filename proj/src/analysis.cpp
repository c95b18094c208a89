#include "eglocal/analysis.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "eglocal/detail/subset_dp.hpp"

namespace eglocal {

namespace {

std::string vstr(Vertex v) { return std::to_string(v); }

std::string set_str(VertexSet s) {
    std::string out = "{";
    bool first = true;
    for (Vertex v : s) {
        if (!first) out += ",";
        out += vstr(v);
        first = false;
    }
    return out + "}";
}

bool all_components_cliques(const Graph& g) {
    for (VertexSet comp : connected_components(g))
        if (!is_clique(g, comp)) return false;
    return true;
}

std::int64_t sum_of(const std::vector<int>& xs) {
    return std::accumulate(xs.begin(), xs.end(), std::int64_t{0});
}

}  // namespace

bool EdgeLocalReport::consistent() const {
    const bool turan = turan_ok && turan_equality == balanced_multipartite;
    const bool path = path_ok && path_equality == components_nontrivial_cliques;
    const bool cycle = !cycle_applicable || (cycle_ok && cycle_equality == is_block_graph);
    return turan && path && cycle;
}

bool is_balanced_complete_multipartite(const Graph& g) {
    const int n = g.order();
    if (n == 0) return true;
    const VertexSet all = g.vertices();
    int parts = 0;
    int part_size = -1;
    VertexSet seen;
    for (Vertex v : all) {
        if (seen.contains(v)) continue;
        const VertexSet part = all - g.neighbors(v);
        for (Vertex x : part)
            if (all - g.neighbors(x) != part) return false;
        if (part_size >= 0 && part.size() != part_size) return false;
        part_size = part.size();
        seen |= part;
        ++parts;
    }
    return parts >= 2;
}

EdgeLocalReport edge_local_report(const Graph& g, const SearchLimits& limits) {
    EdgeLocalReport r;
    r.n = g.order();
    r.m = g.edge_count();
    r.weights = edge_weights(g, limits);
    for (const EdgeWeight& e : r.weights.edges) {
        r.turan_sum += Rational(e.k, e.k - 1);
        r.path_sum += Rational(1, e.l);
        r.cycle_sum += Rational(1, e.w);
    }
    const std::int64_t n = r.n;
    r.turan_bound = Rational(n * n, 2);
    r.path_bound = Rational(n, 2);
    r.cycle_bound = Rational(n - 1, 2);

    r.turan_ok = r.turan_sum <= r.turan_bound;
    r.turan_equality = r.turan_sum == r.turan_bound;
    r.balanced_multipartite = is_balanced_complete_multipartite(g);

    r.path_ok = r.path_sum <= r.path_bound;
    r.path_equality = r.path_sum == r.path_bound;
    r.components_nontrivial_cliques = all_components_cliques(g);
    for (VertexSet comp : connected_components(g))
        if (comp.size() < 2) r.components_nontrivial_cliques = false;

    r.cycle_applicable = r.n >= 1;
    r.is_block_graph = decompose(g).is_block_graph;
    if (r.cycle_applicable) {
        r.cycle_ok = r.cycle_sum <= r.cycle_bound;
        r.cycle_equality = r.cycle_sum == r.cycle_bound;
    }
    return r;
}

BoundReport bound_report(const Graph& g, const SearchLimits& limits, bool with_edge_sums) {
    BoundReport r;
    r.n = g.order();
    r.m = g.edge_count();
    r.weights = vertex_weights(g, limits);
    r.path_bound_halves = sum_of(r.weights.p);
    r.cycle_bound_halves = r.n == 0 ? 0 : sum_of(r.weights.c) - r.weights.circ;
    const std::int64_t twice_m = 2 * static_cast<std::int64_t>(r.m);
    r.path_ineq_ok = twice_m <= r.path_bound_halves;
    r.cycle_ineq_ok = twice_m <= r.cycle_bound_halves;
    r.path_equality = twice_m == r.path_bound_halves;
    r.cycle_equality = twice_m == r.cycle_bound_halves;
    r.components_all_cliques = all_components_cliques(g);
    const BlockDecomposition d = decompose(g);
    r.is_block_graph = d.is_block_graph;
    r.is_parent_dominated = d.is_parent_dominated;
    if (with_edge_sums) r.edge = edge_local_report(g, limits);
    return r;
}

CharacterizationVerdict check_characterizations(const Graph& g, const SearchLimits& limits) {
    CharacterizationVerdict v;
    v.report = bound_report(g, limits, false);
    const BoundReport& r = v.report;
    v.path_consistent = r.path_ineq_ok && r.path_equality == r.components_all_cliques;
    v.cycle_consistent = r.cycle_ineq_ok && r.cycle_equality == r.is_parent_dominated;
    if (!r.path_ineq_ok) v.counterexample += "path bound violated; ";
    else if (!v.path_consistent)
        v.counterexample += r.path_equality ? "path equality on a graph with a non-clique component; "
                                            : "path bound strict although every component is a clique; ";
    if (!r.cycle_ineq_ok) v.counterexample += "cycle bound violated; ";
    else if (!v.cycle_consistent)
        v.counterexample += r.cycle_equality ? "cycle equality on a graph that is not parent-dominated; "
                                             : "cycle bound strict on a parent-dominated block graph; ";
    return v;
}

RecoveryReport classical_recovery(const Graph& g, int k, RecoveryMode mode, const SearchLimits& limits) {
    RecoveryReport r;
    r.mode = mode;
    r.k = k;
    r.n = g.order();
    r.m = g.edge_count();
    r.twice_m = 2 * static_cast<std::int64_t>(r.m);

    if (mode == RecoveryMode::Cycle && r.n == 0) {
        r.detail = "cycle mode needs at least one vertex";
        return r;
    }
    const WeightTable w = vertex_weights(g, limits);
    const std::int64_t n = r.n;

    if (mode == RecoveryMode::Path) {
        const int max_p = r.n == 0 ? 0 : *std::max_element(w.p.begin(), w.p.end());
        if (k < 1 || max_p > k - 1) {
            r.detail = "graph has a path with " + std::to_string(max_p) + " edges, not below k=" + std::to_string(k);
            return r;
        }
        r.local_halves = sum_of(w.p);
        r.classical_halves = n * (k - 1);
        r.classical_class = true;
        for (VertexSet comp : connected_components(g))
            if (comp.size() != k || !is_clique(g, comp)) r.classical_class = false;
    } else {
        if (k < 2 || w.circ > k) {
            r.detail = "circumference " + std::to_string(w.circ) + " exceeds k=" + std::to_string(k);
            return r;
        }
        r.local_halves = sum_of(w.c) - w.circ;
        r.classical_halves = static_cast<std::int64_t>(k) * (n - 1);
        const BlockDecomposition d = decompose(g);
        r.classical_class =
            r.n == 1 || (d.is_block_graph && std::all_of(d.orders.begin(), d.orders.end(), [&](int o) { return o == k; }));
    }
    r.precondition_ok = true;
    r.first_ok = r.twice_m <= r.local_halves;
    r.second_ok = r.local_halves <= r.classical_halves;
    r.first_equality = r.twice_m == r.local_halves;
    r.second_equality = r.local_halves == r.classical_halves;
    r.consistent = r.first_ok && r.second_ok && (r.first_equality && r.second_equality) == r.classical_class;
    return r;
}

std::vector<CheckResult> closure_lemmas(const Graph& g, Vertex v0, const WeightTable& weights,
                                        const SearchLimits& limits) {
    const VPath p = longest_path_from(g, v0, limits);
    const Closure cl = closure(g, p, weights, limits);
    const bool trivial = p.length() == 0;

    CheckResult twins{"twin_weights", true, ""};
    CheckResult good{"all_paths_good", true, ""};
    CheckResult front{"front_exclusion", true, ""};
    CheckResult back{"back_count", true, ""};
    CheckResult prefix{"prefix_agreement", true, ""};
    CheckResult pivot{"pivot_stability", true, ""};
    auto fail = [](CheckResult& r, const std::string& why) {
        if (r.passed) r.detail = why;
        r.passed = false;
    };

    const int L_size = cl.terminals().size();
    for (Vertex v : cl.off_path_twins()) {
        const Vertex t = cl.sets.twin_of[v];
        if (weights.c[v] != weights.c[t])
            fail(twins, "c(" + vstr(v) + ") != c(" + vstr(t) + ")");
    }

    for (Vertex v : cl.extended()) {
        const int cv = weights.c[v];
        std::optional<Vertex> seen_pivot;
        for (const VPath& pv : transforms_ending_at(cl, v)) {
            if (!is_good(cl, pv)) fail(good, pv.to_string() + " is not good");

            for (int i = 0; i < cl.prefix_len && i < pv.vertex_count(); ++i) {
                if (pv[i] != p[i]) {
                    fail(prefix, pv.to_string() + " leaves the origin prefix at index " + std::to_string(i));
                    break;
                }
            }

            if (pv.length() < cv - 1) {
                if (!trivial) {
                    fail(front, pv.to_string() + " is shorter than c(" + vstr(v) + ")-1");
                    fail(back, pv.to_string() + " is shorter than c(" + vstr(v) + ")-1");
                    fail(pivot, pv.to_string() + " has no pivot");
                }
                continue;
            }
            const Segments s = segments(pv, v, cv);
            for (Vertex x : s.front_star)
                if (cl.extended().contains(x)) fail(front, vstr(x) + " lies before the pivot on " + pv.to_string());
            int count = 0;
            for (Vertex x : s.back)
                if (cl.extended().contains(x)) ++count;
            if (count != L_size)
                fail(back, pv.to_string() + " has " + std::to_string(count) + " closure terminals after the pivot, expected " +
                               std::to_string(L_size));
            if (seen_pivot && *seen_pivot != s.pivot) fail(pivot, "pivot of " + vstr(v) + " moves");
            seen_pivot = s.pivot;
        }
    }
    return {twins, good, front, back, prefix, pivot};
}

std::vector<CheckResult> proof_claims(const Graph& g, const SearchLimits& limits) {
    require_exact_cap(g, limits);
    CheckResult spanning{"spanning_cycle", true, ""};
    CheckResult degree{"endpoint_degree", true, ""};

    detail::HamTables tables;
    std::vector<std::uint32_t> from;
    for (VertexSet comp : connected_components(g)) {
        const Subgraph sub = induced(g, comp);
        const Graph& h = sub.graph;
        const int n = h.order();
        const std::uint32_t size = std::uint32_t{1} << n;
        detail::build_ham_tables(h, tables);

        int longest_vertices = 1;
        for (std::uint32_t mask = 1; mask < size; ++mask)
            if (tables.has_path(mask)) longest_vertices = std::max(longest_vertices, std::popcount(mask));
        const int k = longest_vertices - 1;

        // Longest paths with adjacent ends: a (k+1)-cycle, or a single edge.
        bool closable = false;
        if (k == 1) {
            closable = true;
            if (n != 2) spanning.passed = false, spanning.detail = "component " + set_str(comp) + " has k=1 but is not K2";
        }
        for (std::uint32_t mask = 1; k >= 2 && mask < size; ++mask) {
            if (std::popcount(mask) != k + 1 || !tables.has_cycle(h, mask)) continue;
            closable = true;
            if (mask != size - 1 && spanning.passed) {
                spanning.passed = false;
                spanning.detail = "a longest path with adjacent ends misses part of component " + set_str(comp);
            }
        }
        if (closable || k == 0) continue;

        for (Vertex s = 0; s < n; ++s) {
            detail::build_paths_from(h, s, from);
            for (std::uint32_t mask = 1; mask < size; ++mask) {
                if (std::popcount(mask) != k + 1 || !((mask >> s) & 1U)) continue;
                for (Vertex e : VertexSet{from[mask]}) {
                    if (e == s) continue;
                    if (2 * std::min(h.degree(s), h.degree(e)) > k && degree.passed) {
                        degree.passed = false;
                        degree.detail = "longest path " + vstr(sub.to_source[s]) + ".." + vstr(sub.to_source[e]) +
                                        " has both end degrees above " + std::to_string(k) + "/2";
                    }
                }
            }
        }
    }
    return {spanning, degree};
}

std::vector<CheckResult> lemma_suite(const Graph& g, Vertex v0, const SearchLimits& limits) {
    std::vector<CheckResult> out = closure_lemmas(g, v0, vertex_weights(g, limits), limits);
    for (CheckResult& r : proof_claims(g, limits)) out.push_back(std::move(r));
    return out;
}

const char* to_string(StructureKind kind) {
    switch (kind) {
        case StructureKind::Clique: return "CliqueStructure";
        case StructureKind::Alternating: return "AlternatingStructure";
        case StructureKind::Neither: return "Neither";
    }
    return "Neither";
}

StructureVerdict structure_classify(const Graph& g, const Closure& c, const WeightTable& weights) {
    StructureVerdict out;
    const VertexSet L = c.terminals();
    out.terminals = L;
    const int l_size = L.size();

    std::optional<VertexSet> common_s;
    bool s_agrees = true;
    for (Vertex v : c.extended()) {
        TerminalEquality t;
        t.v = v;
        t.c = weights.c[v];
        t.degree = g.degree(v);
        const VertexSet sv = g.neighbors(v) - L;
        t.s_size = sv.size();
        t.weight_split = t.c == l_size + t.s_size;
        t.degree_match = t.degree == l_size;
        out.weight_split_all = out.weight_split_all && t.weight_split;
        out.degree_match_all = out.degree_match_all && t.degree_match;
        out.per_terminal.push_back(t);
        if (!common_s) common_s = sv;
        else if (*common_s != sv) s_agrees = false;
    }

    auto neither = [&](const std::string& why) {
        out.kind = StructureKind::Neither;
        out.failed = why;
        return out;
    };
    if (!common_s) return neither("closure has no terminals");
    if (!s_agrees) return neither("S_v differs between terminals");
    out.s = *common_s;

    std::optional<Vertex> w;
    for (Vertex v : c.extended()) {
        if (c.pivot[v] < 0) return neither("terminal " + vstr(v) + " has no pivot");
        if (w && *w != c.pivot[v]) return neither("pivots differ between terminals");
        w = c.pivot[v];
    }
    out.pivot = *w;

    auto witness = [&](const std::string& name, bool ok, const std::string& detail) {
        out.witnesses.push_back({name, ok, ok ? "" : detail});
        return ok;
    };

    auto first_failure = [&]() -> std::string {
        for (const CheckResult& r : out.witnesses)
            if (!r.passed) return r.name + ": " + r.detail;
        return "";
    };

    if (out.s.empty()) return neither("S is empty");

    if (out.s.size() == 1) {
        const VertexSet clique = L | VertexSet::single(out.pivot);
        bool ok = witness("pivot_in_s", out.s.contains(out.pivot), "pivot " + vstr(out.pivot) + " not in S");
        ok = witness("clique", is_clique(g, clique), set_str(clique) + " is not a clique") && ok;
        bool orders = true;
        for (Vertex v : L) orders = orders && weights.c[v] == clique.size();
        ok = witness("clique_order", orders, "clique order differs from c on L") && ok;
        // With a single terminal the twins are pendant copies of it and remain allowed.
        ok = witness("no_twins", l_size == 1 || c.off_path_twins().empty(),
                     "off-path twins " + set_str(c.off_path_twins())) && ok;
        if (!ok) return neither(first_failure());
        out.kind = StructureKind::Clique;
        return out;
    }

    bool ok = witness("s_equals_l", out.s.size() == l_size,
                      "|S|=" + std::to_string(out.s.size()) + " but |L|=" + std::to_string(l_size));
    bool alternates = true;
    for (Vertex v : c.extended()) {
        for (const VPath& pv : transforms_ending_at(c, v)) {
            if (pv.length() < weights.c[v] - 1) {
                alternates = false;
                continue;
            }
            const Segments s = segments(pv, v, weights.c[v]);
            for (std::size_t i = 0; i < s.back_star.size(); ++i) {
                const Vertex x = s.back_star[i];
                const bool want_s = i % 2 == 0;
                if (want_s ? !out.s.contains(x) : !c.extended().contains(x)) alternates = false;
            }
        }
    }
    ok = witness("alternating_back", alternates, "back segment does not alternate S and terminals") && ok;
    bool s_is_nbhd = true;
    for (Vertex x : c.extended()) s_is_nbhd = s_is_nbhd && g.neighbors(x) == out.s;
    ok = witness("s_is_neighborhood", s_is_nbhd, "some terminal has neighbors outside S") && ok;
    if (!ok) return neither(first_failure());
    out.kind = StructureKind::Alternating;
    return out;
}

ExtremalAudit audit_extremal(const Graph& g, const SearchLimits& limits) {
    ExtremalAudit a;
    const BoundReport r = bound_report(g, limits, false);
    a.extremal = r.cycle_equality;
    a.connected = is_connected(g);
    if (!a.extremal) {
        a.detail = "cycle bound is not attained";
        return a;
    }
    a.passed = a.connected;
    if (!a.connected) a.detail = "extremal graph is disconnected; ";

    const PeelTrace trace = peel(g, limits);
    if (!trace.u) {
        // Edgeless and extremal: a single vertex.
        return a;
    }
    const VPath p = longest_path_from(g, *trace.u, limits);
    const Closure cl = closure(g, p, r.weights, limits);
    a.structure = structure_classify(g, cl, r.weights);
    if (a.structure.kind != StructureKind::Clique) {
        a.passed = false;
        a.detail += std::string("maximum-weight closure is ") + to_string(a.structure.kind) + "; ";
    }

    for (const PeelLayer& layer : trace.layers) {
        LayerEquality e;
        e.index = layer.index;
        const int l_size = layer.terminals.size();
        for (Vertex v : layer.removed) {
            const VertexSet sv = layer.graph_before.neighbors(v) - layer.terminals;
            e.weight_split = e.weight_split && layer.layer_weight[v] == l_size + sv.size();
            e.degree_match = e.degree_match && layer.graph_before.degree(v) == l_size;
        }
        for (Vertex v : layer.vertices_before)
            if (v != *trace.u) e.weights_kept = e.weights_kept && layer.layer_weight[v] == r.weights.c[v];
        if (!(e.weight_split && e.degree_match && e.weights_kept)) {
            a.passed = false;
            a.detail += "layer " + std::to_string(e.index) + " breaks an equality condition; ";
        }
        a.layers.push_back(e);
    }
    return a;
}

}  // namespace eglocal
