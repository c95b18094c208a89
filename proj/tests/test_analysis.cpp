#include <doctest.h>

#include "eglocal/analysis.hpp"
#include "eglocal/generators.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace eglocal;

namespace {

bool all_passed(const std::vector<CheckResult>& checks) {
    for (const CheckResult& c : checks)
        if (!c.passed) return false;
    return true;
}

const CheckResult& named(const std::vector<CheckResult>& checks, const std::string& name) {
    for (const CheckResult& c : checks)
        if (c.name == name) return c;
    throw std::logic_error("no check named " + name);
}

}  // namespace

TEST_SUITE("analysis") {

TEST_CASE("bound goldens") {
    const BoundReport paw = bound_report(fixtures::paw());
    CHECK(paw.path_bound_halves == 12);
    CHECK(paw.cycle_bound_halves == 8);
    CHECK(paw.cycle_equality);
    CHECK_FALSE(paw.path_equality);
    CHECK(paw.is_parent_dominated);

    const BoundReport chain = bound_report(fixtures::chain33());
    CHECK(chain.path_bound_halves == 30);
    CHECK(chain.cycle_bound_halves == 15);
    CHECK(chain.is_block_graph);
    CHECK_FALSE(chain.cycle_equality);

    const BoundReport diamond = bound_report(fixtures::diamond());
    CHECK(diamond.path_bound_halves == 12);
    CHECK(diamond.cycle_bound_halves == 12);

    const BoundReport star = bound_report(fixtures::star3());
    CHECK(star.path_bound_halves == 8);
    CHECK(star.cycle_bound_halves == 6);
    CHECK(star.cycle_equality);

    const BoundReport k3k3 = bound_report(fixtures::k3k3());
    CHECK(k3k3.path_equality);
    CHECK(k3k3.cycle_bound_halves == 15);
    CHECK_FALSE(k3k3.cycle_equality);
}

TEST_CASE("characterizations on small fixtures") {
    for (const Graph& g : {fixtures::star3(), fixtures::c4(), Graph(1), fixtures::paw(), fixtures::chain33(),
                           fixtures::diamond(), fixtures::k3k3(), Graph(0)}) {
        const CharacterizationVerdict v = check_characterizations(g);
        CHECK(v.consistent());
        CHECK(v.counterexample.empty());
    }
    CHECK(check_characterizations(Graph(1)).report.path_equality);
    CHECK(check_characterizations(Graph(1)).report.cycle_equality);
    CHECK_FALSE(check_characterizations(fixtures::c4()).report.cycle_equality);
}

TEST_CASE("characterizations agree with brute force up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) {
            const Graph g = labeled_graph(n, i);
            const BoundReport r = bound_report(g, {}, false);
            CHECK(r.path_ineq_ok);
            CHECK(r.cycle_ineq_ok);
            CHECK(r.path_equality == oracle::components_all_cliques(g));
            CHECK(r.cycle_equality == oracle::parent_dominated(g));
        }
    }
}

TEST_CASE("classical recovery") {
    const RecoveryReport twin = classical_recovery(fixtures::k3k3(), 3, RecoveryMode::Path);
    CHECK(twin.precondition_ok);
    CHECK(twin.twice_m == 12);
    CHECK(twin.local_halves == 12);
    CHECK(twin.classical_halves == 12);
    CHECK(twin.classical_class);
    CHECK(twin.consistent);

    const RecoveryReport star = classical_recovery(fixtures::star3(), 2, RecoveryMode::Cycle);
    CHECK(star.precondition_ok);
    CHECK(star.first_equality);
    CHECK(star.second_equality);
    CHECK(star.classical_class);
    CHECK(star.consistent);

    const RecoveryReport paw = classical_recovery(fixtures::paw(), 3, RecoveryMode::Cycle);
    CHECK(paw.twice_m == 8);
    CHECK(paw.local_halves == 8);
    CHECK(paw.classical_halves == 9);
    CHECK(paw.first_equality);
    CHECK_FALSE(paw.second_equality);
    CHECK_FALSE(paw.classical_class);
    CHECK(paw.consistent);

    CHECK_FALSE(classical_recovery(fixtures::paw(), 2, RecoveryMode::Cycle).precondition_ok);
    CHECK_FALSE(classical_recovery(fixtures::p4(), 2, RecoveryMode::Path).precondition_ok);
}

TEST_CASE("classical recovery is consistent whenever it applies") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) {
            const Graph g = labeled_graph(n, i);
            for (int k = 1; k <= n + 1; ++k) {
                for (RecoveryMode mode : {RecoveryMode::Path, RecoveryMode::Cycle}) {
                    const RecoveryReport r = classical_recovery(g, k, mode);
                    if (r.precondition_ok) CHECK(r.consistent);
                }
            }
        }
    }
}

TEST_CASE("edge-local sums") {
    const EdgeLocalReport multipartite = edge_local_report(turan(6, 3));
    CHECK(multipartite.m == 12);
    CHECK(multipartite.turan_sum == Rational(18));
    CHECK(multipartite.turan_equality);
    CHECK(multipartite.balanced_multipartite);

    const EdgeLocalReport paw = edge_local_report(fixtures::paw());
    CHECK(paw.cycle_sum == Rational(3, 2));
    CHECK(paw.cycle_equality);

    const EdgeLocalReport k3k3 = edge_local_report(fixtures::k3k3());
    CHECK(k3k3.path_sum == Rational(3));
    CHECK(k3k3.path_equality);
    CHECK(k3k3.components_nontrivial_cliques);

    CHECK(is_balanced_complete_multipartite(fixtures::c4()));
    CHECK_FALSE(is_balanced_complete_multipartite(fixtures::paw()));
    CHECK_FALSE(edge_local_report(Graph(0)).cycle_applicable);
}

TEST_CASE("edge-local reports are consistent up to 5 vertices") {
    for (int n = 0; n <= 5; ++n)
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) CHECK(edge_local_report(labeled_graph(n, i)).consistent());
}

TEST_CASE("edge and vertex cycle bounds do not imply one another") {
    const EdgeLocalReport edge = edge_local_report(fixtures::chain33());
    CHECK(edge.cycle_sum == Rational(5, 2));
    CHECK(edge.cycle_equality);
    const BoundReport vertex = bound_report(fixtures::chain33());
    CHECK(vertex.cycle_bound_halves - 2 * vertex.m == 1);
}

TEST_CASE("closure lemmas and proof claims on fixtures") {
    for (const Graph& g : {fixtures::paw(), fixtures::chain33(), fixtures::diamond(), fixtures::star3(),
                           fixtures::c4(), fixtures::p4(), fixtures::k(4), fixtures::k3k3(), Graph(1)}) {
        for (Vertex v0 : g.vertices()) {
            const auto checks = lemma_suite(g, v0);
            CHECK(checks.size() == 8);
            for (const CheckResult& c : checks) {
                INFO(c.name, " ", c.detail);
                CHECK(c.passed);
            }
        }
    }
    const auto diamond = closure_lemmas(fixtures::diamond(), 0, vertex_weights(fixtures::diamond()));
    CHECK(named(diamond, "prefix_agreement").passed);
}

TEST_CASE("closure lemmas on every graph up to 5 vertices") {
    for (int n = 1; n <= 5; ++n) {
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) {
            const Graph g = labeled_graph(n, i);
            for (Vertex v0 : g.vertices()) CHECK(all_passed(lemma_suite(g, v0)));
        }
    }
}

TEST_CASE("structure of maximum-weight closures") {
    {
        const Graph g = fixtures::paw();
        const WeightTable wt = vertex_weights(g);
        const StructureVerdict v = structure_classify(g, closure(g, VPath({0, 1, 2}), wt), wt);
        CHECK(v.kind == StructureKind::Clique);
        CHECK(v.s == VertexSet::of({0}));
        CHECK(v.pivot == 0);
        CHECK(all_passed(v.witnesses));
    }
    {
        const Graph g = fixtures::diamond();
        const WeightTable wt = vertex_weights(g);
        const StructureVerdict v = structure_classify(g, closure(g, VPath({0, 2, 1, 3}), wt), wt);
        CHECK(v.kind == StructureKind::Alternating);
        CHECK(v.s == VertexSet::of({0, 1}));
        CHECK(v.terminals == VertexSet::of({2, 3}));
        CHECK(all_passed(v.witnesses));
    }
    {
        const Graph g = fixtures::chain33();
        const WeightTable wt = vertex_weights(g);
        const StructureVerdict v = structure_classify(g, closure(g, VPath({0, 1, 2, 3, 4, 5}), wt), wt);
        CHECK(v.kind == StructureKind::Clique);
        CHECK(v.s == VertexSet::of({3}));
    }
    CHECK(std::string(to_string(StructureKind::Alternating)) == "AlternatingStructure");
}

TEST_CASE("extremal graphs are connected and never alternating") {
    int extremal = 0;
    for (int n = 1; n <= 6; ++n) {
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) {
            const Graph g = labeled_graph(n, i);
            const ExtremalAudit a = audit_extremal(g);
            if (!a.extremal) continue;
            ++extremal;
            INFO(a.detail);
            CHECK(a.passed);
            CHECK(a.connected);
            if (g.edge_count() > 0) CHECK(a.structure.kind == StructureKind::Clique);
        }
    }
    CHECK(extremal > 0);
    CHECK_FALSE(audit_extremal(fixtures::chain33()).extremal);
}

TEST_CASE("deleting a degree-one vertex shifts m and the cycle bound by one") {
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) {
            const Graph g = labeled_graph(n, i);
            for (Vertex v : g.vertices()) {
                if (g.degree(v) != 1) continue;
                const Graph h = delete_vertices(g, VertexSet::of({v})).graph;
                const BoundReport before = bound_report(g, {}, false);
                const BoundReport after = bound_report(h, {}, false);
                CHECK(before.m - after.m == 1);
                CHECK(before.cycle_bound_halves - after.cycle_bound_halves == 2);
                CHECK(before.cycle_equality == after.cycle_equality);
            }
        }
    }
}

TEST_CASE("weights never grow under vertex deletion") {
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        const Graph g = gen_gnp(10, 0.3, seed);
        const WeightTable w = vertex_weights(g);
        const Subgraph s = delete_vertices(g, VertexSet::of({static_cast<Vertex>(seed % 10)}));
        const WeightTable ws = vertex_weights(s.graph);
        for (Vertex v : s.graph.vertices()) {
            CHECK(ws.p[v] <= w.p[s.to_source[v]]);
            CHECK(ws.c[v] <= w.c[s.to_source[v]]);
        }
    }
}

}  // TEST_SUITE
