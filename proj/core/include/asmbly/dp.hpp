#ifndef ASMBLY_DP_HPP
#define ASMBLY_DP_HPP

#include <functional>
#include <optional>
#include <vector>

#include "asmbly/hypergraph.hpp"
#include "asmbly/rational.hpp"

namespace asmbly {

enum class CostKind : std::uint8_t { Additive, RetroYield };

/**
 * Cost model for the table recursion. Additive charges a per-step cost and
 * adds tail values (seeds are worth 0); RetroYield multiplies the tail sum by
 * the yield factor r at every step and seeds the recursion with seed_weight.
 */
struct CostModel {
    CostKind kind = CostKind::Additive;
    Rational affix_cost = 1;  // Additive: weight-1 steps
    Rational cycl_cost = 1;   // Additive: weight-0 steps
    Rational r = Rational(5) / 4;
    /** RetroYield seed value; heavy-atom count when unset. */
    std::function<Rational(const Compound&)> seed_weight;
};

/**
 * Per-vertex results of the cost recursion. value is empty for vertices that
 * cannot be assembled from the seed set. best_edges lists every producing
 * edge achieving the minimum, ascending. plan_count counts optimal
 * derivation trees: the product over tail members (with multiplicity) of the
 * tail counts, summed over best edges; shared compounds multiply once per
 * use.
 */
struct DpTable {
    std::vector<std::optional<Rational>> value;
    std::vector<std::vector<EdgeId>> best_edges;
    std::vector<BigInt> plan_count;

    bool reachable(VertexId v) const { return value.at(v).has_value(); }
};

/**
 * Exact bottom-up evaluation in topological order:
 *   Additive:   c(v) = min_e [ step(e) + sum_{u in tail(e)} c(u) ], seeds 0
 *   RetroYield: c(v) = min_e [ r * sum_{u in tail(e)} c(u) ], seeds weighed
 * Rational arithmetic throughout, so ties are exact. Throws
 * InvalidInputError when h has a directed cycle.
 */
DpTable dp_solve(const DirectedHypergraph& h, const CostModel& cm);

/**
 * Number of optimal plans under the shared-subassembly convention: a plan
 * assigns one best edge to every compound it needs, and a compound reused in
 * several branches is assembled once. Counted by exhaustive backtracking
 * over assignments (each leaf is a distinct selected edge set). Throws
 * UnreachableError when the goal has no value, ResourceLimitError when more
 * than cap plans exist.
 */
BigInt count_optimal_plans(const DirectedHypergraph& h, VertexId goal, const CostModel& cm,
                           std::uint64_t cap = 10'000'000);

/**
 * Materializes one optimal plan, taking the smallest best edge at every
 * vertex. The witness carries the table value as objective and an order
 * produced by the pathway validator.
 */
Witness extract_plan(const DirectedHypergraph& h, const DpTable& table, VertexId goal);

/** Longest seed-to-sink chain of the witness, counting hyperedges. */
int witness_depth(const DirectedHypergraph& h, const Witness& w);

/**
 * Maximum of witness_depth over all optimal plans for the goal: every vertex
 * independently takes its deepest best edge, which is itself one consistent
 * plan.
 */
int max_depth_over_optimal_plans(const DirectedHypergraph& h, const DpTable& table, VertexId goal);

/**
 * Copy of h that keeps only the table's best edges (vertex ids and seed set
 * are unchanged; kept edges are re-added in ascending original id order, so
 * new edge k is the k-th smallest kept id). Every plan for the goal is a
 * pathway here and vice versa.
 */
DirectedHypergraph best_edge_subhypergraph(const DirectedHypergraph& h, const DpTable& table);

}  // namespace asmbly

#endif
