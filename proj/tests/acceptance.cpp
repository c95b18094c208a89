// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <thread>
#include <vector>

#include "eglocal/analysis.hpp"
#include "eglocal/generators.hpp"
#include "eglocal/peeling.hpp"
#include "eglocal/scan.hpp"
#include "oracle.hpp"

using namespace eglocal;

namespace {

struct Criterion {
    Criterion(int id_, std::string title_) : id(id_), title(std::move(title_)) {}
    int id;
    std::string title;
    bool passed = true;
    std::string detail;
    double seconds = 0.0;
};

std::vector<Criterion> results;

void report(Criterion c, double seconds) {
    c.seconds = seconds;
    results.push_back(std::move(c));
}

double since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

std::string counts(std::initializer_list<std::pair<const char*, std::uint64_t>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ", ";
        out += k;
        out += "=" + std::to_string(v);
    }
    return out;
}

// Criteria 1, 2 and 6 share one exhaustive pass over n = 1..7.
void exhaustive_bounds() {
    const auto t0 = std::chrono::steady_clock::now();
    std::uint64_t graphs = 0, path_viol = 0, path_mis = 0, path_eq = 0;
    std::uint64_t cycle_viol = 0, cycle_mis = 0, cycle_eq = 0;
    std::uint64_t extremal = 0, audit_fail = 0, errors = 0;
    ScanOptions options;
    options.jobs = jobs();
    options.extremal_audit = true;
    for (int n = 1; n <= 7; ++n) {
        scan_labeled(n, options, [&](const ScanRow& r) {
            ++graphs;
            if (!r.error.empty()) ++errors;
            const std::int64_t twice_m = 2 * static_cast<std::int64_t>(r.m);
            path_viol += twice_m > r.path_bound_halves;
            path_mis += (twice_m == r.path_bound_halves) != r.components_all_cliques;
            path_eq += twice_m == r.path_bound_halves;
            cycle_viol += twice_m > r.cycle_bound_halves;
            cycle_mis += (twice_m == r.cycle_bound_halves) != r.is_parent_dominated;
            cycle_eq += twice_m == r.cycle_bound_halves;
            if (twice_m == r.cycle_bound_halves) {
                extremal += r.extremal;
                audit_fail += !r.extremal || r.audit_failed;
            }
        });
    }
    const double seconds = since(t0);
    const bool corpus_ok = graphs == 2131019 && errors == 0;

    Criterion c1{1, "path bound, all labeled graphs n=1..7"};
    // Graphs whose components are all cliques are set partitions: Bell numbers B1..B7 sum to 1155.
    c1.passed = corpus_ok && path_viol == 0 && path_mis == 0 && path_eq == 1155;
    c1.detail = counts({{"graphs", graphs}, {"violations", path_viol}, {"class_mismatches", path_mis},
                        {"equalities", path_eq}, {"errors", errors}});
    report(c1, seconds);

    Criterion c2{2, "cycle bound, all labeled graphs n=1..7"};
    c2.passed = corpus_ok && cycle_viol == 0 && cycle_mis == 0;
    c2.detail = counts({{"graphs", graphs}, {"violations", cycle_viol}, {"class_mismatches", cycle_mis},
                        {"equalities", cycle_eq}, {"errors", errors}});
    report(c2, 0.0);

    Criterion c6{6, "extremal graphs connected, clique structure, per-layer equalities (n<=7)"};
    c6.passed = corpus_ok && audit_fail == 0 && extremal == cycle_eq;
    c6.detail = counts({{"extremal", cycle_eq}, {"audited", extremal}, {"exceptions", audit_fail}});
    report(c6, 0.0);
}

Graph named(int which) {
    switch (which) {
        case 0: return Graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}});
        case 1: return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}});
        case 2: return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
        default: return star(3);
    }
}

void fixture_goldens() {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{3, "fixture goldens, library and brute force agree"};
    int failures = 0;
    auto expect = [&](bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            if (c.detail.empty()) c.detail = "first failure: " + what;
        }
    };
    // {path_halves, cycle_halves, m}
    const std::int64_t want[4][3] = {{12, 8, 4}, {30, 15, 7}, {12, 12, 5}, {8, 6, 3}};
    const char* names[4] = {"PAW", "CHAIN33", "DIAMOND", "STAR3"};
    for (int i = 0; i < 4; ++i) {
        const Graph g = named(i);
        const BoundReport r = bound_report(g);
        const oracle::Weights o = oracle::weights(g);
        std::int64_t sum_p = 0, sum_c = 0;
        for (Vertex v : g.vertices()) sum_p += o.p[v], sum_c += o.c[v];
        expect(r.path_bound_halves == want[i][0] && sum_p == want[i][0], std::string(names[i]) + " path bound");
        expect(r.cycle_bound_halves == want[i][1] && sum_c - o.circ == want[i][1], std::string(names[i]) + " cycle bound");
        expect(r.m == want[i][2], std::string(names[i]) + " m");
    }
    expect(bound_report(named(0)).cycle_equality && !bound_report(named(0)).path_equality, "PAW equality flags");
    expect(!bound_report(named(1)).cycle_equality, "CHAIN33 strict");
    const EdgeLocalReport chain = edge_local_report(named(1));
    expect(chain.cycle_sum == Rational(5, 2) && chain.cycle_equality, "CHAIN33 edge-cycle sum");
    std::int64_t inverse_num = 0;  // sum 60/w over the oracle's edge weights
    for (const auto& e : oracle::edge_weights(named(1))) inverse_num += 60 / e.w;
    expect(inverse_num == 150, "CHAIN33 edge-cycle sum (brute force)");
    expect(bound_report(named(3)).cycle_equality, "STAR3 equality");
    for (int n = 1; n <= 9; ++n) {
        std::vector<int> orders{n};
        const BoundReport k = bound_report(gen_clique_union(orders));
        const std::int64_t twice_m = static_cast<std::int64_t>(n) * (n - 1);
        expect(k.path_bound_halves == twice_m && k.cycle_bound_halves == twice_m, "K" + std::to_string(n));
    }
    c.passed = failures == 0;
    if (c.passed) c.detail = "4 named fixtures, K1..K9";
    report(c, since(t0));
}

void peeling_certificates() {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{4, "peeling certificates, 10000 G(n,p) plus all graphs n<=6"};
    const double ps[4] = {0.1, 0.3, 0.5, 0.8};
    std::uint64_t random_fail = 0, enum_fail = 0, enum_graphs = 0, errors = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const int n = 1 + static_cast<int>(i % 12);
        const Graph g = gen_gnp(n, ps[(i / 12) % 4], i);
        try {
            const CertificateReport r = verify_certificate(peel(g), g, vertex_weights(g));
            random_fail += !r.all_passed;
        } catch (const CapExceeded&) {
            ++errors;
        }
    }
    ScanOptions options;
    options.jobs = jobs();
    options.peel = true;
    for (int n = 1; n <= 6; ++n) {
        const ScanSummary s = scan_labeled(n, options);
        enum_graphs += s.graphs_processed;
        enum_fail += s.certificate_failures;
        errors += s.errors;
    }
    c.passed = random_fail == 0 && enum_fail == 0 && errors == 0;
    c.detail = counts({{"random_failures", random_fail}, {"enumerated", enum_graphs},
                       {"enumerated_failures", enum_fail}, {"errors", errors}});
    report(c, since(t0));
}

void lemma_suite_all() {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{5, "closure lemmas and proof claims, every vertex of every graph n<=6"};
    ScanOptions options;
    options.jobs = jobs();
    options.lemmas = true;
    std::uint64_t graphs = 0, failures = 0, errors = 0;
    std::string first;
    for (int n = 1; n <= 6; ++n) {
        const ScanSummary s = scan_labeled(n, options, [&](const ScanRow& r) {
            if (r.lemma_failed && first.empty()) first = r.graph6 + ": " + r.detail;
        });
        graphs += s.graphs_processed;
        failures += s.lemma_failures;
        errors += s.errors;
    }
    c.passed = failures == 0 && errors == 0;
    c.detail = counts({{"graphs", graphs}, {"failures", failures}, {"errors", errors}});
    if (!first.empty()) c.detail += "; first: " + first;
    report(c, since(t0));
}

void edge_local_all() {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{7, "edge-weighted bounds and equality classes, n<=6, plus K_{2,2,2}"};
    std::uint64_t graphs = 0, inconsistent = 0;
    for (int n = 0; n <= 6; ++n) {
        for (std::uint64_t i = 0; i < labeled_count(n); ++i) {
            ++graphs;
            inconsistent += !edge_local_report(labeled_graph(n, i)).consistent();
        }
    }
    const EdgeLocalReport k222 = edge_local_report(turan(6, 3));
    const bool turan_ok = k222.turan_sum == Rational(18) && k222.turan_bound == Rational(18) && k222.turan_equality;
    c.passed = inconsistent == 0 && turan_ok;
    c.detail = counts({{"graphs", graphs}, {"inconsistent", inconsistent}}) +
               ", K222 sum=" + std::to_string(k222.turan_sum.numerator()) + "/" +
               std::to_string(k222.turan_sum.denominator());
    report(c, since(t0));
}

void generator_contracts() {
    const auto t0 = std::chrono::steady_clock::now();
    Criterion c{8, "generated families attain equality"};
    std::uint64_t pd_fail = 0, cu_fail = 0;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        const int blocks = 1 + static_cast<int>(seed % 4);
        const int max_order = 2 + static_cast<int>((seed / 4) % 4);
        const BoundReport r = bound_report(gen_parent_dominated(seed, blocks, max_order), {}, false);
        pd_fail += !(r.cycle_equality && r.is_parent_dominated);
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        SplitMix64 rng(seed);
        std::vector<int> orders(1 + rng.below(4));
        for (int& o : orders) o = 1 + static_cast<int>(rng.below(5));
        const BoundReport r = bound_report(gen_clique_union(orders), {}, false);
        cu_fail += !(r.path_equality && r.components_all_cliques);
    }
    c.passed = pd_fail == 0 && cu_fail == 0;
    c.detail = counts({{"parent_dominated_failures", pd_fail}, {"clique_union_failures", cu_fail}});
    report(c, since(t0));
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        exhaustive_bounds();
        fixture_goldens();
        peeling_certificates();
        lemma_suite_all();
        edge_local_all();
        generator_contracts();
    } catch (const std::exception& e) {
        std::printf("acceptance aborted: %s\n", e.what());
        return 1;
    }
    std::sort(results.begin(), results.end(), [](const Criterion& a, const Criterion& b) { return a.id < b.id; });
    int failed = 0;
    for (const Criterion& c : results) {
        failed += !c.passed;
        std::printf("criterion %d %s  %s  [%s] (%.1fs)\n", c.id, c.passed ? "PASS" : "FAIL", c.title.c_str(),
                    c.detail.c_str(), c.seconds);
    }
    std::printf("acceptance: %zu criteria, %d failed (%.1fs)\n", results.size(), failed, since(t0));
    return failed == 0 ? 0 : 1;
}
