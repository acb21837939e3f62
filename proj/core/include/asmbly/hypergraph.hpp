#ifndef ASMBLY_HYPERGRAPH_HPP
#define ASMBLY_HYPERGRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "asmbly/molgraph.hpp"
#include "asmbly/rational.hpp"

namespace asmbly {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/** Which disassembly rule produced an edge. */
enum class RuleKind : std::uint8_t { VertexSplit, EdgeRemoval };

/**
 * Directed hyperedge stored in assembly orientation: tail compounds are
 * consumed, the head compounds are produced. Tails and heads are multisets,
 * kept as sorted id vectors with repetition. Affixations weigh 1,
 * cyclizations 0.
 */
struct Hyperedge {
    std::vector<VertexId> tail;
    std::vector<VertexId> head;
    int weight = 1;
    RuleKind rule = RuleKind::VertexSplit;
};

/** A hypergraph vertex: one compound per isomorphism class. */
struct Compound {
    VertexId id = 0;
    CanonicalCode code;
    LabeledGraph graph;
};

/**
 * Directed multi-hypergraph over compounds. Vertices are interned by
 * canonical code, so isomorphic graphs collapse onto one vertex. A subset of
 * vertices forms the seed set (freely available starting material).
 */
class DirectedHypergraph {
public:
    /** Interns a compound; returns the existing id when the code is known. */
    VertexId add_vertex(LabeledGraph g);
    VertexId add_vertex(LabeledGraph g, CanonicalCode code);
    EdgeId add_edge(std::vector<VertexId> tail, std::vector<VertexId> head, int weight,
                    RuleKind rule);
    void mark_seed(VertexId v);

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const Compound& compound(VertexId v) const { return vertices_.at(v); }
    const Hyperedge& edge(EdgeId e) const { return edges_.at(e); }
    const std::vector<Compound>& compounds() const noexcept { return vertices_; }
    const std::vector<Hyperedge>& edges() const noexcept { return edges_; }
    bool is_seed(VertexId v) const { return seed_.at(v); }
    /** Seed ids in ascending order. */
    std::vector<VertexId> seed_set() const;
    std::optional<VertexId> find(const CanonicalCode& code) const;

    /** Edges with v in their head (v is produced). */
    const std::vector<EdgeId>& producers(VertexId v) const { return producers_.at(v); }
    /** Edges with v in their tail (v is consumed). */
    const std::vector<EdgeId>& consumers(VertexId v) const { return consumers_.at(v); }

private:
    std::vector<Compound> vertices_;
    std::vector<Hyperedge> edges_;
    std::vector<bool> seed_;
    std::vector<std::vector<EdgeId>> producers_;
    std::vector<std::vector<EdgeId>> consumers_;
    std::vector<std::pair<std::string, VertexId>> index_;  // sorted code -> id
};

/** One assembly pathway: a selected sub-hypergraph plus a realizability order. */
struct Witness {
    std::vector<EdgeId> selected_edges;
    std::vector<VertexId> selected_vertices;
    std::vector<EdgeId> order;
    Rational objective = 0;
    int affixation_count = 0;
    int cyclization_count = 0;
};

struct ValidationReport {
    bool passed = false;
    std::string failure;  // empty when passed
    std::vector<EdgeId> order;
    std::vector<EdgeId> stuck_edges;
};

/**
 * Least fixed point of forward closure: starting from the sources, an edge
 * whose tail is fully covered contributes all its head vertices.
 */
std::vector<VertexId> reachable_from(const DirectedHypergraph& h,
                                     const std::vector<VertexId>& sources);

/** True when every vertex is reachable from the seed set. */
bool is_grounded(const DirectedHypergraph& h);

/** Splits every edge into one edge per head vertex, copying weight and rule. */
DirectedHypergraph to_b_hypergraph(const DirectedHypergraph& h);

/**
 * Restriction to everything that can contribute to x: keeps an edge iff some
 * head vertex can still reach x through tail membership chains. Vertex ids
 * are re-interned densely; x itself is always kept.
 */
DirectedHypergraph restrict_below(const DirectedHypergraph& h, VertexId x);

/**
 * Checks that w is a valid pathway for the target: selected edges and
 * vertices are consistent, the selection is grounded in the seed set, the
 * target is selected and maximal, and a realizability order exists (greedy:
 * repeatedly schedule the lowest-id runnable edge).
 */
ValidationReport validate_pathway(const DirectedHypergraph& h, const Witness& w, VertexId target);

/** True when tail-to-head reachability has no cycle. */
bool is_acyclic(const DirectedHypergraph& h);

/**
 * Minimum number of edges over pathways assembling the target, paired with
 * the same quantity on to_b_hypergraph(h). The first can be strictly smaller
 * when some edge has several head vertices.
 */
std::pair<std::size_t, std::size_t> min_edge_comparison(const DirectedHypergraph& h,
                                                        VertexId target);

// --- serialization ---------------------------------------------------------

std::string hypergraph_to_json(const DirectedHypergraph& h, std::optional<VertexId> target = {});
/** Returns the hypergraph and the target id stored in the file, if any. */
std::pair<DirectedHypergraph, std::optional<VertexId>> hypergraph_from_json(
    const std::string& text);

std::string witness_to_json(const DirectedHypergraph& h, const Witness& w);
Witness witness_from_json(const DirectedHypergraph& h, const std::string& text);

/** Bipartite rendering: compounds as boxes, hyperedges as small squares. */
std::string witness_to_dot(const DirectedHypergraph& h, const Witness& w);

}  // namespace asmbly

#endif
