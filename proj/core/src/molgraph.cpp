#include "asmbly/molgraph.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "asmbly/errors.hpp"

namespace asmbly {

std::uint32_t LabeledGraph::add_vertex(std::string label) {
    if (label.empty()) throw InvalidInputError("empty atom label");
    labels_.push_back(std::move(label));
    adj_.emplace_back();
    return static_cast<std::uint32_t>(labels_.size() - 1);
}

void LabeledGraph::add_edge(std::uint32_t u, std::uint32_t v, Bond order) {
    if (u >= labels_.size() || v >= labels_.size())
        throw InvalidInputError("bond endpoint out of range");
    if (u == v) throw InvalidInputError("self bond on vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw InvalidInputError("duplicate bond " + std::to_string(u) + "-" + std::to_string(v));
    if (u > v) std::swap(u, v);
    edges_.push_back({u, v, order});
    adj_[u].emplace_back(v, order);
    adj_[v].emplace_back(u, order);
}

bool LabeledGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    for (auto [w, o] : adj_[u])
        if (w == v) return true;
    return false;
}

LabeledGraph parse_graph_text(const std::string& text) {
    LabeledGraph g;
    std::map<long long, std::uint32_t> index;  // external index -> internal id
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream line(raw);
        std::string head;
        if (!(line >> head)) continue;
        if (head == "b") {
            long long i, j;
            int order;
            if (!(line >> i >> j >> order))
                throw ParseError("expected 'b <i> <j> <order>'", lineno);
            std::string extra;
            if (line >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
            auto it_i = index.find(i), it_j = index.find(j);
            if (it_i == index.end())
                throw ParseError("bond references undeclared vertex " + std::to_string(i), lineno);
            if (it_j == index.end())
                throw ParseError("bond references undeclared vertex " + std::to_string(j), lineno);
            if (order < 1 || order > 4)
                throw ParseError("bond order must be 1..4, got " + std::to_string(order), lineno);
            try {
                g.add_edge(it_i->second, it_j->second, static_cast<Bond>(order));
            } catch (const InvalidInputError& e) {
                throw ParseError(e.what(), lineno);
            }
        } else {
            if (!std::isupper(static_cast<unsigned char>(head[0])))
                throw ParseError("atom symbol must start with an uppercase letter: '" + head + "'",
                                 lineno);
            long long idx;
            if (!(line >> idx)) throw ParseError("expected '<SYMBOL> <vertex-index>'", lineno);
            std::string extra;
            if (line >> extra) throw ParseError("trailing token '" + extra + "'", lineno);
            if (index.count(idx))
                throw ParseError("vertex " + std::to_string(idx) + " declared twice", lineno);
            index[idx] = g.add_vertex(head);
        }
    }
    return g;
}

namespace {

void bfs_mark(const LabeledGraph& g, std::uint32_t start, std::vector<int>& comp, int id) {
    std::queue<std::uint32_t> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto [w, o] : g.neighbors(v))
            if (comp[w] < 0) {
                comp[w] = id;
                q.push(w);
            }
    }
}

}  // namespace

std::vector<LabeledGraph> connected_components(const LabeledGraph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int count = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (comp[v] < 0) bfs_mark(g, v, comp, count++);

    std::vector<LabeledGraph> parts(count);
    std::vector<std::uint32_t> local(g.vertex_count());
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        local[v] = parts[comp[v]].add_vertex(g.label(v));
    for (const auto& e : g.edges())
        parts[comp[e.u]].add_edge(local[e.u], local[e.v], e.order);
    return parts;
}

bool is_connected(const LabeledGraph& g) {
    if (g.vertex_count() == 0) return true;
    std::vector<int> comp(g.vertex_count(), -1);
    bfs_mark(g, 0, comp, 0);
    return std::none_of(comp.begin(), comp.end(), [](int c) { return c < 0; });
}

std::size_t cyclomatic_number(const LabeledGraph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    std::size_t count = 0;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
        if (comp[v] < 0) bfs_mark(g, v, comp, static_cast<int>(count++));
    return g.edge_count() + count - g.vertex_count();
}

bool is_base_compound(const LabeledGraph& g) {
    return g.vertex_count() == 2 && g.edge_count() == 1;
}

bool is_atomic(const LabeledGraph& g) {
    return g.vertex_count() == 1 && g.edge_count() == 0;
}

std::string formula(const LabeledGraph& g) {
    std::map<std::string, std::size_t> counts;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) ++counts[g.label(v)];
    std::string out;
    auto append = [&](const std::string& sym) {
        auto it = counts.find(sym);
        if (it == counts.end()) return;
        out += sym;
        if (it->second > 1) out += std::to_string(it->second);
        counts.erase(it);
    };
    append("C");  // carbon first, then alphabetical
    while (!counts.empty()) append(counts.begin()->first);
    return out;
}

}  // namespace asmbly
