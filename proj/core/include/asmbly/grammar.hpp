#ifndef ASMBLY_GRAMMAR_HPP
#define ASMBLY_GRAMMAR_HPP

#include <string>
#include <vector>

#include "asmbly/hypergraph.hpp"

namespace asmbly {

struct CfgRule {
    std::string lhs;
    std::vector<std::string> rhs;
};

/**
 * Straight-line grammar: every nonterminal has exactly one rule, the rule
 * digraph is acyclic, so the grammar derives a single string. Terminals are
 * canonical codes of seed compounds; nonterminals are N<id> names. A seed
 * target makes start itself a terminal and leaves rules empty.
 */
struct Cfg {
    std::vector<std::string> terminals;     // sorted, distinct
    std::vector<std::string> nonterminals;  // rule order
    std::string start;
    std::vector<CfgRule> rules;  // exactly one per nonterminal, same order
};

/**
 * One rule per selected non-seed compound: RHS is the tail of its producing
 * edge, each member rendered as a terminal (seed) or nonterminal and the
 * whole sequence sorted by canonical code, multiplicity kept. An edge with
 * several head compounds contributes one rule per head. Throws
 * InvalidInputError when a compound has two producing edges (ambiguous) or
 * none (not a pathway).
 */
Cfg cfg_from_witness(const DirectedHypergraph& h, const Witness& w, VertexId target);

/** The unique string derived from `symbol` using only the rules below it. */
std::vector<std::string> expand_symbol(const Cfg& g, const std::string& symbol);

/** The unique string derived from the start symbol. */
std::vector<std::string> expand_string(const Cfg& g);

/**
 * Chomsky normal form preserving the derived string. Unary rules are first
 * collapsed into their child; every distinct terminal then gets one wrapper
 * nonterminal, and a rule with q >= 3 symbols is right-combed through q - 2
 * intermediaries. Growth is exactly: wrappers = #terminals, intermediaries =
 * sum over collapsed rules of max(q - 2, 0).
 */
Cfg to_cnf(const Cfg& g);

/** One `lhs -> s1 s2 ...` line per rule after a `# start: X` header. */
std::string cfg_to_text(const Cfg& g);

}  // namespace asmbly

#endif
