#include "eglocal/scan.hpp"

#include <algorithm>
#include <chrono>
#include <tuple>
#include <vector>

#include "eglocal/analysis.hpp"
#include "eglocal/generators.hpp"
#include "eglocal/graph6.hpp"
#include "eglocal/peeling.hpp"

namespace eglocal {

namespace {

constexpr std::size_t kChunk = 4096;

void note(ScanRow& row, const std::string& what) {
    if (row.detail.empty()) row.detail = what;
}

void evaluate(const Graph& g, const ScanOptions& options, ScanRow& row) {
    const BoundReport r = bound_report(g, options.limits, options.edge_local);
    row.path_bound_halves = r.path_bound_halves;
    row.cycle_bound_halves = r.cycle_bound_halves;
    row.path_equality = r.path_equality;
    row.cycle_equality = r.cycle_equality;
    row.components_all_cliques = r.components_all_cliques;
    row.is_block_graph = r.is_block_graph;
    row.is_parent_dominated = r.is_parent_dominated;

    if (!r.path_ineq_ok) row.violation = true, note(row, "path bound violated");
    if (!r.cycle_ineq_ok) row.violation = true, note(row, "cycle bound violated");
    if (r.path_equality != r.components_all_cliques) row.mismatch = true, note(row, "path equality class mismatch");
    if (r.cycle_equality != r.is_parent_dominated) row.mismatch = true, note(row, "cycle equality class mismatch");

    if (r.edge) {
        const EdgeLocalReport& e = *r.edge;
        row.edge_turan_equality = e.turan_equality;
        row.edge_path_equality = e.path_equality;
        row.edge_cycle_equality = e.cycle_equality;
        if (!e.turan_ok || !e.path_ok || !e.cycle_ok) row.violation = true, note(row, "edge-weighted bound violated");
        if (!e.consistent()) row.mismatch = true, note(row, "edge-weighted equality class mismatch");
    }

    if (options.peel) {
        const PeelTrace trace = peel(g, options.limits);
        const CertificateReport cert = verify_certificate(trace, g, r.weights);
        const bool diagnosis = cert.equality == (cert.layers_tight && cert.covers_all_but_u && cert.weights_preserved);
        if (!cert.all_passed || !diagnosis) {
            row.certificate_failed = true;
            for (const CertificateCheck& c : cert.checks)
                if (!c.passed) note(row, "certificate check " + c.name + " failed");
            note(row, "peel equality diagnosis disagrees with the bound");
        }
    }

    if (options.lemmas) {
        auto absorb = [&](const std::vector<CheckResult>& results, const std::string& where) {
            for (const CheckResult& c : results) {
                if (c.passed) continue;
                row.lemma_failed = true;
                note(row, c.name + where + ": " + c.detail);
            }
        };
        for (Vertex v0 : g.vertices()) absorb(closure_lemmas(g, v0, r.weights, options.limits), " at v0=" + std::to_string(v0));
        absorb(proof_claims(g, options.limits), "");
    }

    if (options.extremal_audit && r.cycle_equality) {
        row.extremal = true;
        const ExtremalAudit a = audit_extremal(g, options.limits);
        if (!a.passed) row.audit_failed = true, note(row, "extremal audit: " + a.detail);
    }
}

}  // namespace

void ScanSummary::add(const ScanRow& row) {
    ++graphs_processed;
    if (!row.error.empty()) {
        ++errors;
        return;
    }
    inequality_violations += row.violation;
    characterization_mismatches += row.mismatch;
    path_equalities += row.path_equality;
    cycle_equalities += row.cycle_equality;
    edge_turan_equalities += row.edge_turan_equality;
    edge_path_equalities += row.edge_path_equality;
    edge_cycle_equalities += row.edge_cycle_equality;
    certificate_failures += row.certificate_failed;
    lemma_failures += row.lemma_failed;
    audit_failures += row.audit_failed;
    extremal_audited += row.extremal;
}

bool ScanSummary::clean() const {
    return inequality_violations == 0 && characterization_mismatches == 0 && certificate_failures == 0 &&
           lemma_failures == 0 && audit_failures == 0;
}

bool ScanSummary::same_counts(const ScanSummary& o) const {
    auto tie = [](const ScanSummary& s) {
        return std::tie(s.graphs_processed, s.inequality_violations, s.characterization_mismatches, s.path_equalities,
                        s.cycle_equalities, s.edge_turan_equalities, s.edge_path_equalities, s.edge_cycle_equalities,
                        s.certificate_failures, s.lemma_failures, s.audit_failures, s.extremal_audited, s.errors);
    };
    return tie(*this) == tie(o);
}

ScanRow scan_one(const Graph& g, const ScanOptions& options, std::size_t index) {
    ScanRow row;
    row.index = index;
    row.graph6 = to_graph6(g);
    row.n = g.order();
    row.m = g.edge_count();
    try {
        evaluate(g, options, row);
    } catch (const CapExceeded& e) {
        row.error = e.what();
    }
    return row;
}

ScanSummary scan_serial(std::size_t count, const GraphSource& source, const ScanOptions& options, const RowSink& sink) {
    const auto start = std::chrono::steady_clock::now();
    ScanSummary summary;
    for (std::size_t i = 0; i < count; ++i) {
        const ScanRow row = scan_one(source(i), options, i);
        summary.add(row);
        if (sink) sink(row);
    }
    summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

ScanSummary scan_parallel(std::size_t count, const GraphSource& source, const ScanOptions& options,
                          const RowSink& sink) {
    const auto start = std::chrono::steady_clock::now();
    ScanSummary summary;
    const int jobs = std::max(1, options.jobs);
    std::vector<ScanRow> buffer;
    for (std::size_t base = 0; base < count; base += kChunk) {
        const std::size_t len = std::min(kChunk, count - base);
        buffer.assign(len, ScanRow{});
        const auto signed_len = static_cast<std::ptrdiff_t>(len);
#pragma omp parallel for schedule(dynamic, 16) num_threads(jobs)
        for (std::ptrdiff_t j = 0; j < signed_len; ++j) {
            const std::size_t i = base + static_cast<std::size_t>(j);
            buffer[j] = scan_one(source(i), options, i);
        }
        for (const ScanRow& row : buffer) {
            summary.add(row);
            if (sink) sink(row);
        }
    }
    summary.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return summary;
}

ScanSummary scan(std::size_t count, const GraphSource& source, const ScanOptions& options, const RowSink& sink) {
    return options.jobs > 1 ? scan_parallel(count, source, options, sink) : scan_serial(count, source, options, sink);
}

ScanSummary scan_labeled(int n, const ScanOptions& options, const RowSink& sink) {
    const std::uint64_t count = labeled_count(n);
    return scan(count, [n](std::size_t i) { return labeled_graph(n, i); }, options, sink);
}

}  // namespace eglocal
