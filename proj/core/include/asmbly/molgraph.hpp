#ifndef ASMBLY_MOLGRAPH_HPP
#define ASMBLY_MOLGRAPH_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace asmbly {

/** Bond label. Aromatic is a distinct label, not a fractional order. */
enum class Bond : std::uint8_t { Single = 1, Double = 2, Triple = 3, Aromatic = 4 };

/**
 * Undirected molecular graph over heavy atoms. Vertices carry element labels,
 * edges carry a Bond label. Simple by construction: add_edge rejects loops,
 * parallel bonds and dangling endpoints.
 */
class LabeledGraph {
public:
    struct Edge {
        std::uint32_t u = 0, v = 0;  // normalized so that u < v
        Bond order = Bond::Single;
    };

    std::uint32_t add_vertex(std::string label);
    void add_edge(std::uint32_t u, std::uint32_t v, Bond order = Bond::Single);

    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    const std::string& label(std::uint32_t v) const { return labels_.at(v); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::vector<std::pair<std::uint32_t, Bond>>& neighbors(std::uint32_t v) const {
        return adj_.at(v);
    }
    std::size_t degree(std::uint32_t v) const { return adj_.at(v).size(); }
    bool has_edge(std::uint32_t u, std::uint32_t v) const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<std::uint32_t, Bond>>> adj_;
};

/**
 * Exact canonical certificate: two graphs get equal codes iff they are
 * label-preserving isomorphic. Computed by partition refinement with
 * backtracking over individualization choices, never by hashing.
 */
struct CanonicalCode {
    std::string code;
    auto operator<=>(const CanonicalCode&) const = default;
};

/**
 * Parses the plain edge-list format. One record per line:
 *   <SYMBOL> <vertex-index>      declares an atom
 *   b <i> <j> <order>            declares a bond, order in 1..4 (4 = aromatic)
 * '#' starts a comment. Vertex ids are assigned in order of first appearance.
 */
LabeledGraph parse_graph_text(const std::string& text);

/**
 * Parses a SMILES subset: organic atoms B C N O P S F Cl Br I, branches,
 * ring-closure digits (and %nn), bond symbols - = #. No charges, isotopes,
 * stereo markers or aromatic lowercase forms.
 */
LabeledGraph parse_smiles(const std::string& smiles);

CanonicalCode canonical_form(const LabeledGraph& g);

/** Label-preserving isomorphism test via backtracking search. Kept independent
    of canonical_form so the two can cross-check each other. */
bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b);

/** Connected components as separate graphs, vertices re-indexed; component
    order follows the smallest original vertex id they contain. */
std::vector<LabeledGraph> connected_components(const LabeledGraph& g);

bool is_connected(const LabeledGraph& g);

/** |E| - |V| + number of components. */
std::size_t cyclomatic_number(const LabeledGraph& g);

/** Exactly two atoms joined by one bond. */
bool is_base_compound(const LabeledGraph& g);

/** A single atom with no bonds. */
bool is_atomic(const LabeledGraph& g);

/** Hill-ish formula string such as "C8" or "C4N", for labels and summaries. */
std::string formula(const LabeledGraph& g);

}  // namespace asmbly

#endif
