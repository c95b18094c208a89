#pragma once

// Corpus scans: every per-graph check, aggregated in input order.
//
// scan_serial is the reference implementation. scan_parallel evaluates graphs
// on an OpenMP team in fixed-size chunks and emits rows in input order, so
// both produce identical rows and summaries.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>

#include "eglocal/errors.hpp"
#include "eglocal/graph.hpp"

namespace eglocal {

struct ScanOptions {
    int jobs = 1;
    SearchLimits limits;
    bool edge_local = false;      // edge-weighted sums and their equality classes
    bool peel = false;            // peeling certificate
    bool lemmas = false;          // closure lemmas from every vertex, plus the proof claims
    bool extremal_audit = false;  // structure and equality conditions on cycle-extremal graphs
};

struct ScanRow {
    std::size_t index = 0;
    std::string graph6;
    int n = 0;
    int m = 0;
    std::int64_t path_bound_halves = 0;
    std::int64_t cycle_bound_halves = 0;
    bool path_equality = false;
    bool cycle_equality = false;
    bool components_all_cliques = false;
    bool is_block_graph = false;
    bool is_parent_dominated = false;

    bool violation = false;  // some inequality fails
    bool mismatch = false;   // some equality characterization fails
    bool edge_turan_equality = false;
    bool edge_path_equality = false;
    bool edge_cycle_equality = false;
    bool certificate_failed = false;
    bool lemma_failed = false;
    bool audit_failed = false;
    bool extremal = false;   // audited as cycle-extremal
    std::string error;       // set when an exact search refused the graph
    std::string detail;      // first failure description
};

struct ScanSummary {
    std::uint64_t graphs_processed = 0;
    std::uint64_t inequality_violations = 0;
    std::uint64_t characterization_mismatches = 0;
    std::uint64_t path_equalities = 0;
    std::uint64_t cycle_equalities = 0;
    std::uint64_t edge_turan_equalities = 0;
    std::uint64_t edge_path_equalities = 0;
    std::uint64_t edge_cycle_equalities = 0;
    std::uint64_t certificate_failures = 0;
    std::uint64_t lemma_failures = 0;
    std::uint64_t audit_failures = 0;
    std::uint64_t extremal_audited = 0;
    std::uint64_t errors = 0;
    double elapsed_seconds = 0.0;

    void add(const ScanRow& row);
    /// No violation, mismatch or failed check (errors are reported separately).
    bool clean() const;
    /// Same counts, ignoring elapsed time.
    bool same_counts(const ScanSummary& o) const;
};

ScanRow scan_one(const Graph& g, const ScanOptions& options, std::size_t index = 0);

using GraphSource = std::function<Graph(std::size_t)>;
using RowSink = std::function<void(const ScanRow&)>;

ScanSummary scan_serial(std::size_t count, const GraphSource& source, const ScanOptions& options,
                        const RowSink& sink = {});
/// `source` must be safe to call concurrently.
ScanSummary scan_parallel(std::size_t count, const GraphSource& source, const ScanOptions& options,
                          const RowSink& sink = {});
/// scan_parallel when options.jobs > 1, else scan_serial.
ScanSummary scan(std::size_t count, const GraphSource& source, const ScanOptions& options,
                 const RowSink& sink = {});

/// Every labeled graph on n <= 7 vertices.
ScanSummary scan_labeled(int n, const ScanOptions& options, const RowSink& sink = {});

}  // namespace eglocal
