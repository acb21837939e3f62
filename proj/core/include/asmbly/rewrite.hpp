#ifndef ASMBLY_REWRITE_HPP
#define ASMBLY_REWRITE_HPP

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "asmbly/hypergraph.hpp"
#include "asmbly/molgraph.hpp"

namespace asmbly {

/** Affixation joins two compounds (weight 1); cyclization closes a ring
    inside one compound (weight 0). */
enum class StepKind : std::uint8_t { Affixation, Cyclization };

/**
 * One application of a disassembly rule to a parent compound. Fragments are
 * the raw rule output; a fragment may be a single stranded atom under
 * EdgeRemoval. Markers locate the split-vertex copies (VertexSplit) or the
 * removed bond's endpoints (EdgeRemoval) inside the fragments, so a step can
 * be replayed forward.
 */
struct DisassemblyStep {
    StepKind kind = StepKind::Affixation;
    RuleKind rule = RuleKind::VertexSplit;
    std::vector<LabeledGraph> fragments;
    std::vector<std::string> fragment_codes;  // canonical codes, aligned with fragments

    struct Marker {
        std::uint32_t fragment = 0;
        std::uint32_t vertex = 0;
    };
    Marker a, b;
    Bond bond = Bond::Single;  // EdgeRemoval: label of the removed bond
    std::string site;          // human-readable description in parent coordinates
};

/**
 * All distinct vertex splits of g: for every vertex of degree >= 2 and every
 * bipartition of its incident bonds into two nonempty parts, duplicate the
 * vertex and give each copy one part. Steps with the same fragment multiset
 * are merged. Throws InvalidInputError for base compounds or single atoms.
 */
std::vector<DisassemblyStep> enumerate_vertex_splits(const LabeledGraph& g);

/**
 * All distinct single-bond removals of g. A removal that keeps g connected is
 * a cyclization; one that disconnects it is an affixation whose fragments are
 * the two components (possibly a stranded atom). Throws InvalidInputError
 * when g has no bonds.
 */
std::vector<DisassemblyStep> enumerate_edge_removals(const LabeledGraph& g);

struct ExpansionOptions {
    std::size_t max_compounds = 2'000'000;
    std::size_t max_edges = 20'000'000;
    std::chrono::milliseconds wall_budget{0};  // 0 = unlimited
    bool cyclization_only = false;
    unsigned threads = 1;
};

struct Expansion {
    DirectedHypergraph h;
    VertexId target = 0;
};

/**
 * Breadth-first disassembly closure from the target under one rule.
 * Compounds are interned globally by canonical code; every rule application
 * becomes a hyperedge in assembly orientation (tail = fragments, head =
 * parent). Seeds depend on the rule: vertex splits bottom out at base
 * compounds (a split always leaves a bond on each side), while edge removals
 * take every compound apart into single atoms, so base compounds carry a
 * weight-1 edge from their two atoms and only atoms seed the hypergraph.
 * Throws ResourceLimitError when an option cap is exceeded.
 */
Expansion expand(const LabeledGraph& target, RuleKind rule, const ExpansionOptions& opts = {});

/**
 * Canonical codes of all compounds reachable from the target through
 * cyclization-classified vertex splits only. The target itself is a member
 * (empty reaction sequence). Sorted ascending.
 */
std::vector<CanonicalCode> decyclization_closure(const LabeledGraph& target,
                                                 const ExpansionOptions& opts = {});

}  // namespace asmbly

#endif
