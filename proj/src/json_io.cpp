#include "eglocal/json_io.hpp"

namespace eglocal {

namespace {

Json edges_json(const std::vector<Edge>& edges) {
    Json out = Json::array();
    for (const Edge& e : edges) out.push_back({e.u, e.v});
    return out;
}

Json checks_json(const std::vector<CertificateCheck>& checks) {
    Json out = Json::array();
    for (const CertificateCheck& c : checks)
        out.push_back({{"name", c.name}, {"passed", c.passed}, {"slack_halves", c.slack_halves}, {"detail", c.detail}});
    return out;
}

}  // namespace

Json to_json(VertexSet s) { return s.to_vector(); }

Json to_json(const Rational& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

Json to_json(const WeightTable& w) { return {{"p", w.p}, {"c", w.c}, {"circ", w.circ}}; }

Json to_json(const EdgeWeightTable& w) {
    Json out = Json::array();
    for (const EdgeWeight& e : w.edges) out.push_back({{"edge", {e.edge.u, e.edge.v}}, {"k", e.k}, {"l", e.l}, {"w", e.w}});
    return out;
}

Json to_json(const EdgeLocalReport& r) {
    Json out;
    out["turan"] = {{"sum", to_json(r.turan_sum)}, {"bound", to_json(r.turan_bound)}, {"ok", r.turan_ok},
                    {"equality", r.turan_equality}, {"balanced_multipartite", r.balanced_multipartite}};
    out["path"] = {{"sum", to_json(r.path_sum)}, {"bound", to_json(r.path_bound)}, {"ok", r.path_ok},
                   {"equality", r.path_equality}, {"components_cliques", r.components_nontrivial_cliques}};
    out["cycle"] = {{"applicable", r.cycle_applicable}, {"sum", to_json(r.cycle_sum)}, {"bound", to_json(r.cycle_bound)},
                    {"ok", r.cycle_ok}, {"equality", r.cycle_equality}, {"block_graph", r.is_block_graph}};
    out["consistent"] = r.consistent();
    return out;
}

Json to_json(const BoundReport& r) {
    Json out;
    out["n"] = r.n;
    out["m"] = r.m;
    out["weights"] = to_json(r.weights);
    out["path_bound_halves"] = r.path_bound_halves;
    out["cycle_bound_halves"] = r.cycle_bound_halves;
    out["path_ineq_ok"] = r.path_ineq_ok;
    out["cycle_ineq_ok"] = r.cycle_ineq_ok;
    out["path_equality"] = r.path_equality;
    out["cycle_equality"] = r.cycle_equality;
    out["components_all_cliques"] = r.components_all_cliques;
    out["is_block_graph"] = r.is_block_graph;
    out["is_parent_dominated"] = r.is_parent_dominated;
    if (r.edge) out["edge"] = to_json(*r.edge);
    return out;
}

Json to_json(const CharacterizationVerdict& v) {
    return {{"report", to_json(v.report)},
            {"path_consistent", v.path_consistent},
            {"cycle_consistent", v.cycle_consistent},
            {"counterexample", v.counterexample}};
}

Json to_json(const BlockDecomposition& d) {
    Json blocks = Json::array();
    for (std::size_t i = 0; i < d.blocks.size(); ++i)
        blocks.push_back({{"vertices", to_json(d.blocks[i])}, {"order", d.orders[i]}, {"clique", static_cast<bool>(d.block_is_clique[i])}});
    Json out;
    out["blocks"] = blocks;
    out["cut_vertices"] = to_json(d.cut_vertices);
    out["connected"] = d.connected;
    out["is_block_graph"] = d.is_block_graph;
    out["is_parent_dominated"] = d.is_parent_dominated;
    out["root"] = d.witness_root ? Json(*d.witness_root) : Json(nullptr);
    out["parent"] = d.parent;
    return out;
}

Json to_json(const PeelTrace& t) {
    Json layers = Json::array();
    for (const PeelLayer& l : t.layers) {
        layers.push_back({{"i", l.index},
                          {"x", l.start},
                          {"path", l.path.seq()},
                          {"L", to_json(l.removed)},
                          {"estar", edges_json(l.removed_edges)},
                          {"weight_sum_halves", l.weight_sum_halves},
                          {"isolated", to_json(l.isolated_removed)}});
    }
    Json out;
    out["u"] = t.u ? Json(*t.u) : Json(nullptr);
    out["initial_isolated"] = to_json(t.initial_isolated);
    out["layers"] = layers;
    out["totals"] = {{"m", t.m}, {"layer_sum_halves", t.layer_sum_halves}, {"bound_halves", t.bound_halves}};
    return out;
}

Json to_json(const CertificateReport& r) {
    return {{"checks", checks_json(r.checks)},
            {"all_passed", r.all_passed},
            {"final_slack_halves", r.final_slack_halves},
            {"equality", r.equality},
            {"layers_tight", r.layers_tight},
            {"covers_all_but_u", r.covers_all_but_u},
            {"weights_preserved", r.weights_preserved},
            {"weight_drops", r.weight_drops}};
}

Json to_json(const std::vector<CheckResult>& checks) {
    Json out = Json::array();
    for (const CheckResult& c : checks) out.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    return out;
}

Json to_json(const StructureVerdict& v) {
    Json terminals = Json::array();
    for (const TerminalEquality& t : v.per_terminal)
        terminals.push_back({{"v", t.v}, {"c", t.c}, {"degree", t.degree}, {"s_size", t.s_size},
                             {"weight_split", t.weight_split}, {"degree_match", t.degree_match}});
    return {{"kind", to_string(v.kind)},
            {"pivot", v.pivot},
            {"L", to_json(v.terminals)},
            {"S", to_json(v.s)},
            {"witnesses", to_json(v.witnesses)},
            {"failed", v.failed},
            {"terminals", terminals}};
}

Json to_json(const ExtremalAudit& a) {
    Json layers = Json::array();
    for (const LayerEquality& e : a.layers)
        layers.push_back({{"i", e.index}, {"weight_split", e.weight_split}, {"degree_match", e.degree_match},
                          {"weights_kept", e.weights_kept}});
    return {{"extremal", a.extremal}, {"connected", a.connected}, {"structure", to_json(a.structure)},
            {"layers", layers},       {"passed", a.passed},       {"detail", a.detail}};
}

Json to_json(const ScanRow& r) {
    Json out;
    out["index"] = r.index;
    out["graph6"] = r.graph6;
    out["n"] = r.n;
    out["m"] = r.m;
    if (!r.error.empty()) {
        out["error"] = r.error;
        return out;
    }
    out["path_bound_halves"] = r.path_bound_halves;
    out["cycle_bound_halves"] = r.cycle_bound_halves;
    out["path_equality"] = r.path_equality;
    out["cycle_equality"] = r.cycle_equality;
    out["components_all_cliques"] = r.components_all_cliques;
    out["is_block_graph"] = r.is_block_graph;
    out["is_parent_dominated"] = r.is_parent_dominated;
    out["violation"] = r.violation;
    out["mismatch"] = r.mismatch;
    if (!r.detail.empty()) out["detail"] = r.detail;
    return out;
}

Json to_json(const ScanSummary& s, bool with_timing) {
    Json out;
    out["graphs_processed"] = s.graphs_processed;
    out["inequality_violations"] = s.inequality_violations;
    out["characterization_mismatches"] = s.characterization_mismatches;
    out["equality_count"] = {{"path", s.path_equalities},
                             {"cycle", s.cycle_equalities},
                             {"edge_turan", s.edge_turan_equalities},
                             {"edge_path", s.edge_path_equalities},
                             {"edge_cycle", s.edge_cycle_equalities}};
    out["certificate_failures"] = s.certificate_failures;
    out["lemma_failures"] = s.lemma_failures;
    out["audit_failures"] = s.audit_failures;
    out["extremal_audited"] = s.extremal_audited;
    out["errors"] = s.errors;
    if (with_timing) out["elapsed"] = s.elapsed_seconds;
    return out;
}

std::string scan_csv_header() {
    return "graph6,n,m,path_bound_halves,cycle_bound_halves,path_equality,cycle_equality,"
           "components_all_cliques,is_block_graph,is_parent_dominated,violation,mismatch,error";
}

std::string to_csv(const ScanRow& r) {
    auto b = [](bool x) { return x ? "1" : "0"; };
    // graph6 bytes lie in 63..126 and never include a comma or quote.
    std::string out = r.graph6 + "," + std::to_string(r.n) + "," + std::to_string(r.m) + ",";
    if (!r.error.empty()) return out + ",,,,,,,,,1";
    out += std::to_string(r.path_bound_halves) + "," + std::to_string(r.cycle_bound_halves) + ",";
    out += std::string(b(r.path_equality)) + "," + b(r.cycle_equality) + "," + b(r.components_all_cliques) + "," +
           b(r.is_block_graph) + "," + b(r.is_parent_dominated) + "," + b(r.violation) + "," + b(r.mismatch) + ",0";
    return out;
}

}  // namespace eglocal
