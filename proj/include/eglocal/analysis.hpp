#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "eglocal/blocks.hpp"
#include "eglocal/errors.hpp"
#include "eglocal/graph.hpp"
#include "eglocal/peeling.hpp"
#include "eglocal/rotation.hpp"
#include "eglocal/weights.hpp"

namespace eglocal {

using Rational = boost::rational<std::int64_t>;

struct CheckResult {
    std::string name;
    bool passed = true;
    std::string detail;
};

/// Edge-weighted sums against their bounds, each with its equality class.
struct EdgeLocalReport {
    int n = 0;
    int m = 0;
    EdgeWeightTable weights;

    Rational turan_sum;   // sum k/(k-1)
    Rational path_sum;    // sum 1/l
    Rational cycle_sum;   // sum 1/w
    Rational turan_bound; // n^2/2
    Rational path_bound;  // n/2
    Rational cycle_bound; // (n-1)/2

    bool turan_ok = true;
    bool turan_equality = false;
    bool balanced_multipartite = false;  // complete multipartite, >= 2 equal parts

    bool path_ok = true;
    bool path_equality = false;
    bool components_nontrivial_cliques = false;  // every component a clique of order >= 2

    /// The cycle-weight sum has no meaningful bound on the empty graph.
    bool cycle_applicable = false;
    bool cycle_ok = true;
    bool cycle_equality = false;
    bool is_block_graph = false;

    bool consistent() const;
};

struct BoundReport {
    int n = 0;
    int m = 0;
    WeightTable weights;
    std::int64_t path_bound_halves = 0;   // sum p
    std::int64_t cycle_bound_halves = 0;  // sum c - circ
    bool path_ineq_ok = true;
    bool cycle_ineq_ok = true;
    bool path_equality = false;
    bool cycle_equality = false;
    bool components_all_cliques = false;
    bool is_block_graph = false;
    bool is_parent_dominated = false;
    std::optional<EdgeLocalReport> edge;
};

BoundReport bound_report(const Graph& g, const SearchLimits& limits = {}, bool with_edge_sums = true);

EdgeLocalReport edge_local_report(const Graph& g, const SearchLimits& limits = {});

/// Complement is a disjoint union of cliques of one common order, with at least two of them.
bool is_balanced_complete_multipartite(const Graph& g);

struct CharacterizationVerdict {
    BoundReport report;
    bool path_consistent = true;   // path_equality == components_all_cliques, inequality holds
    bool cycle_consistent = true;  // cycle_equality == is_parent_dominated, inequality holds
    std::string counterexample;    // empty when consistent

    bool consistent() const { return path_consistent && cycle_consistent; }
};

CharacterizationVerdict check_characterizations(const Graph& g, const SearchLimits& limits = {});

enum class RecoveryMode { Path, Cycle };

/// The chain 2m <= local bound <= classical bound, all in half-units.
///
/// Path mode assumes no path with k edges and compares against n(k-1)/2;
/// cycle mode assumes circumference <= k and compares against k(n-1)/2.
struct RecoveryReport {
    RecoveryMode mode = RecoveryMode::Path;
    int k = 0;
    int n = 0;
    int m = 0;
    bool precondition_ok = false;
    std::string detail;
    std::int64_t twice_m = 0;
    std::int64_t local_halves = 0;
    std::int64_t classical_halves = 0;
    bool first_ok = false;
    bool second_ok = false;
    bool first_equality = false;
    bool second_equality = false;
    /// Path: every component is K_k. Cycle: connected, every block is K_k (K_1 counts).
    bool classical_class = false;
    /// Inequalities hold and (both equalities) == classical_class.
    bool consistent = false;
};

RecoveryReport classical_recovery(const Graph& g, int k, RecoveryMode mode, const SearchLimits& limits = {});

/// Closure checks for the longest v0-path: twin weights, good paths, front
/// exclusion, back count, prefix agreement, pivot stability.
std::vector<CheckResult> closure_lemmas(const Graph& g, Vertex v0, const WeightTable& weights,
                                        const SearchLimits& limits = {});

/// Graph-wide claims about longest paths, per component with longest path length k:
///   spanning_cycle  - a longest path with adjacent ends covers its component;
///   endpoint_degree - without a (k+1)-cycle, some end of every longest path has degree <= k/2.
std::vector<CheckResult> proof_claims(const Graph& g, const SearchLimits& limits = {});

/// closure_lemmas followed by proof_claims.
std::vector<CheckResult> lemma_suite(const Graph& g, Vertex v0, const SearchLimits& limits = {});

enum class StructureKind { Clique, Alternating, Neither };

const char* to_string(StructureKind kind);

struct TerminalEquality {
    Vertex v = -1;
    int c = 0;
    int degree = 0;
    int s_size = 0;
    bool weight_split = false;  // c(v) = |L| + |S_v|
    bool degree_match = false;  // d(v) = |L|
};

struct StructureVerdict {
    StructureKind kind = StructureKind::Neither;
    Vertex pivot = -1;
    VertexSet terminals;
    VertexSet s;                // common S_v, when all S_v agree
    std::vector<CheckResult> witnesses;
    std::string failed;         // first failed predicate when kind == Neither
    std::vector<TerminalEquality> per_terminal;
    bool weight_split_all = true;
    bool degree_match_all = true;
};

/// Reports the predicates of the closure factually; the dichotomy is only
/// guaranteed for closures of maximum-weight vertices in extremal graphs.
StructureVerdict structure_classify(const Graph& g, const Closure& c, const WeightTable& weights);

struct LayerEquality {
    int index = 0;
    bool weight_split = true;   // c_i(v) = |L_i| + |S_v| on every removed vertex
    bool degree_match = true;   // d_i(v) = |L_i|
    bool weights_kept = true;   // c_i(v) = c(v) on V(G_i) minus u
};

struct ExtremalAudit {
    bool extremal = false;
    bool connected = false;
    StructureVerdict structure;
    std::vector<LayerEquality> layers;
    bool passed = false;
    std::string detail;
};

/// For a graph attaining the cycle bound: connectivity, structure of the
/// maximum-weight closure, and the equality conditions along the peel trace.
ExtremalAudit audit_extremal(const Graph& g, const SearchLimits& limits = {});

}  // namespace eglocal
