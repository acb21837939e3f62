#ifndef ASMBLY_ILP_HPP
#define ASMBLY_ILP_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "asmbly/dp.hpp"
#include "asmbly/hypergraph.hpp"
#include "asmbly/rewrite.hpp"

namespace asmbly {

/**
 * Edge cost schemes. MinAffixations charges each edge its weight.
 * LexAffixThenFewEdges scales to 1000*w+1 so affixations dominate and ties
 * break toward fewer edges; MoreEdges uses 1000*w-1, breaking ties toward
 * more edges (both directions are exposed deliberately). Custom supplies one
 * integer cost per edge; negative costs are allowed but prune weakly.
 */
enum class ObjectiveMode : std::uint8_t {
    MinAffixations,
    LexAffixThenFewEdges,
    MoreEdges,
    Custom,
};

struct Objective {
    ObjectiveMode mode = ObjectiveMode::MinAffixations;
    std::vector<long long> custom_costs;  // Custom: indexed by edge id
};

/**
 * Binary program over a grounded acyclic hypergraph: variable y_v selects a
 * compound, x_e selects an edge. Constraints: a selected non-seed vertex has
 * exactly one selected producer; a selected edge forces all its tail (and
 * head) vertices; a selected non-seed vertex other than the goal must feed
 * some selected edge (the goal is exempt: it is the product). The goal is
 * fixed selected. Throws InvalidInputError for cyclic input or bad custom
 * costs, UnreachableError when the goal cannot be assembled from the seeds.
 */
class IlpModel {
public:
    IlpModel(const DirectedHypergraph& h, VertexId goal, Objective obj = {});

    const DirectedHypergraph& hypergraph() const noexcept { return *h_; }
    VertexId goal() const noexcept { return goal_; }
    const Objective& objective() const noexcept { return obj_; }
    long long edge_cost(EdgeId e) const { return cost_.at(e); }

    /** CPLEX LP rendering of the exact model (for external cross-checks). */
    std::string to_lp_text() const;

private:
    const DirectedHypergraph* h_;
    VertexId goal_;
    Objective obj_;
    std::vector<long long> cost_;
};

struct SolveOptions {
    std::uint64_t max_nodes = 100'000'000;
    std::chrono::milliseconds wall_budget{0};  // 0 = unlimited
    /**
     * true: plan semantics, matching to_lp_text. A selected vertex has
     * exactly one selected producer and every produced intermediate must be
     * consumed. false: at least one producer, byproducts may be discarded;
     * used for minimum-edge questions on hypergraphs whose edges can produce
     * several vertices at once.
     */
    bool single_producer = true;
};

struct IlpSolution {
    Witness witness;
    long long objective = 0;
    std::uint64_t nodes = 0;
};

/**
 * Exact optimum by depth-first branch and bound: branch on the unproduced
 * required compound with the most atoms, try its producers cheapest first,
 * prune on admissible lower bounds (per-vertex cheapest-producer sums, a
 * size-doubling argument, and per-size-class seeding needs), seed the
 * incumbent with the additive table plan. Among cost ties the witness is the
 * first one found, which the fixed branching order makes deterministic.
 * Throws ResourceLimitError past the node/time budget.
 */
IlpSolution solve(const IlpModel& m, const SolveOptions& opts = {});

/**
 * Visits every optimal witness exactly once (distinct selected edge sets; a
 * witness is one choice of producer per compound, so the walk that branches
 * over producers meets each selection once). One solve finds the optimum,
 * then a second sweep keeps only branches whose bound still reaches it.
 * Visit order is the deterministic search order, not sorted. Return false
 * from the visitor to stop early; the result is the number of witnesses
 * visited. Budget options apply to the sweep as a whole.
 */
std::uint64_t for_each_optimal_witness(const IlpModel& m,
                                       const std::function<bool(const Witness&)>& visit,
                                       const SolveOptions& opts = {});

/**
 * All optimal witnesses, distinct in their selected edge sets, up to limit,
 * sorted lexicographically by selected edge set.
 */
std::vector<Witness> enumerate_optimal_witnesses(const IlpModel& m, std::size_t limit,
                                                 const SolveOptions& opts = {});

struct AssemblyIndexResult {
    Expansion expansion;
    IlpSolution solution;
    int index = 0;  // affixation count at the optimum
};

/** expand + MinAffixations solve, end to end. */
AssemblyIndexResult assembly_index_full(const LabeledGraph& target, RuleKind rule,
                                        const ExpansionOptions& eopts = {},
                                        const SolveOptions& sopts = {});
int assembly_index(const LabeledGraph& target, RuleKind rule);

/**
 * Independent oracle: forward search over sets of available compounds
 * (0/1-BFS on affixation count) on the expansion of the target. Exact but
 * exponential; meant for small inputs. Throws ResourceLimitError when the
 * minimum exceeds cap or the state space explodes.
 */
int brute_force_assembly_index(const LabeledGraph& target, RuleKind rule, int cap);

/**
 * Minimum affixation count over the table's optimal plans: the exact optimum
 * of MinAffixations restricted to best edges.
 */
int min_affixations_over_optimal_plans(const DirectedHypergraph& h, const DpTable& table,
                                       VertexId goal);

}  // namespace asmbly

#endif
