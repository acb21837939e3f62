#include "asmbly/grammar.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "asmbly/errors.hpp"

namespace asmbly {

namespace {

std::string nonterminal_name(VertexId v) { return "N" + std::to_string(v); }

const CfgRule* find_rule(const Cfg& g, const std::string& lhs) {
    for (const auto& r : g.rules)
        if (r.lhs == lhs) return &r;
    return nullptr;
}

void expand_into(const Cfg& g, const std::string& symbol, std::vector<std::string>& out,
                 std::map<std::string, std::vector<std::string>>& memo, int depth) {
    if (depth > static_cast<int>(g.rules.size()) + 1)
        throw InvalidInputError("grammar has a cyclic rule chain");
    const CfgRule* rule = find_rule(g, symbol);
    if (!rule) {  // terminal
        out.push_back(symbol);
        return;
    }
    auto it = memo.find(symbol);
    if (it == memo.end()) {
        std::vector<std::string> sub;
        for (const auto& s : rule->rhs) expand_into(g, s, sub, memo, depth + 1);
        it = memo.emplace(symbol, std::move(sub)).first;
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
}

}  // namespace

Cfg cfg_from_witness(const DirectedHypergraph& h, const Witness& w, VertexId target) {
    Cfg g;
    std::vector<char> selected(h.vertex_count(), 0);
    for (VertexId v : w.selected_vertices) selected[v] = 1;
    if (target >= h.vertex_count() || !selected[target])
        throw InvalidInputError("target is not part of the witness");

    // Producing edge per selected non-seed compound.
    std::vector<std::vector<EdgeId>> producing(h.vertex_count());
    for (EdgeId e : w.selected_edges)
        for (VertexId v : h.edge(e).head)
            if (selected[v]) producing[v].push_back(e);

    auto symbol_of = [&](VertexId v) {
        return h.is_seed(v) ? h.compound(v).code.code : nonterminal_name(v);
    };

    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (!selected[v]) continue;
        if (h.is_seed(v)) {
            g.terminals.push_back(h.compound(v).code.code);
            continue;
        }
        if (producing[v].size() > 1)
            throw InvalidInputError("compound " + std::to_string(v) +
                                    " has several producing edges; the grammar would be ambiguous");
        if (producing[v].empty())
            throw InvalidInputError("compound " + std::to_string(v) +
                                    " has no producing edge; the witness is not a pathway");
        CfgRule rule;
        rule.lhs = nonterminal_name(v);
        std::vector<VertexId> tail = h.edge(producing[v].front()).tail;
        std::sort(tail.begin(), tail.end(), [&](VertexId a, VertexId b) {
            return h.compound(a).code < h.compound(b).code;
        });
        for (VertexId u : tail) rule.rhs.push_back(symbol_of(u));
        g.nonterminals.push_back(rule.lhs);
        g.rules.push_back(std::move(rule));
    }
    std::sort(g.terminals.begin(), g.terminals.end());
    g.terminals.erase(std::unique(g.terminals.begin(), g.terminals.end()), g.terminals.end());
    g.start = symbol_of(target);
    return g;
}

std::vector<std::string> expand_symbol(const Cfg& g, const std::string& symbol) {
    std::vector<std::string> out;
    std::map<std::string, std::vector<std::string>> memo;
    expand_into(g, symbol, out, memo, 0);
    return out;
}

std::vector<std::string> expand_string(const Cfg& g) { return expand_symbol(g, g.start); }

Cfg to_cnf(const Cfg& g) {
    // Collapse unary rules into their child (alias substitution).
    std::map<std::string, std::string> alias;
    for (const auto& r : g.rules)
        if (r.rhs.size() == 1) alias[r.lhs] = r.rhs.front();
    auto resolve = [&](std::string s) {
        std::size_t hops = 0;
        while (alias.count(s)) {
            s = alias[s];
            if (++hops > alias.size()) throw InvalidInputError("grammar has a cyclic rule chain");
        }
        return s;
    };

    Cfg out;
    out.start = resolve(g.start);

    std::vector<CfgRule> collapsed;
    for (const auto& r : g.rules) {
        if (r.rhs.size() == 1) continue;
        CfgRule c;
        c.lhs = r.lhs;
        for (const auto& s : r.rhs) c.rhs.push_back(resolve(s));
        collapsed.push_back(std::move(c));
    }

    // One wrapper nonterminal per terminal.
    std::map<std::string, std::string> wrapper;
    for (std::size_t i = 0; i < g.terminals.size(); ++i)
        wrapper[g.terminals[i]] = "T" + std::to_string(i);
    out.terminals = g.terminals;

    if (wrapper.count(out.start)) {
        // Seed start: the whole language is one terminal.
        std::string t = out.start;
        out.start = wrapper[t];
        out.nonterminals.push_back(out.start);
        out.rules.push_back({out.start, {t}});
        return out;
    }

    for (const auto& r : collapsed) {
        std::vector<std::string> rhs;
        for (const auto& s : r.rhs) rhs.push_back(wrapper.count(s) ? wrapper[s] : s);
        // Right-comb: q symbols need q - 2 intermediaries.
        std::string lhs = r.lhs;
        std::size_t i = 0;
        while (rhs.size() - i > 2) {
            std::string mid = r.lhs + "_" + std::to_string(i);
            out.nonterminals.push_back(lhs);
            out.rules.push_back({lhs, {rhs[i], mid}});
            lhs = mid;
            ++i;
        }
        out.nonterminals.push_back(lhs);
        out.rules.push_back({lhs, {rhs[rhs.size() - 2], rhs[rhs.size() - 1]}});
    }
    for (const auto& [t, wrap] : wrapper) {
        out.nonterminals.push_back(wrap);
        out.rules.push_back({wrap, {t}});
    }
    return out;
}

std::string cfg_to_text(const Cfg& g) {
    std::ostringstream out;
    out << "# start: " << g.start << "\n";
    for (const auto& r : g.rules) {
        out << r.lhs << " ->";
        for (const auto& s : r.rhs) out << " " << s;
        out << "\n";
    }
    return out.str();
}

}  // namespace asmbly
