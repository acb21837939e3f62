#include "asmbly/dp.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "asmbly/errors.hpp"

namespace asmbly {

namespace {

Rational seed_value(const CostModel& cm, const Compound& c) {
    if (cm.kind == CostKind::Additive) return 0;
    if (cm.seed_weight) return cm.seed_weight(c);
    return static_cast<int>(c.graph.vertex_count());
}

/** Vertices ordered so that every tail member precedes every head member. */
std::vector<VertexId> topo_order(const DirectedHypergraph& h) {
    std::vector<std::size_t> indeg(h.vertex_count(), 0);
    for (const auto& e : h.edges())
        for (VertexId v : e.head) indeg[v] += e.tail.size();
    std::queue<VertexId> ready;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (indeg[v] == 0) ready.push(v);
    std::vector<VertexId> order;
    order.reserve(h.vertex_count());
    while (!ready.empty()) {
        VertexId u = ready.front();
        ready.pop();
        order.push_back(u);
        for (EdgeId e : h.consumers(u)) {
            std::size_t uses = 0;
            for (VertexId t : h.edge(e).tail)
                if (t == u) ++uses;
            for (VertexId v : h.edge(e).head) {
                indeg[v] -= uses;
                if (indeg[v] == 0) ready.push(v);
            }
        }
    }
    if (order.size() != h.vertex_count())
        throw InvalidInputError("hypergraph has a directed cycle");
    return order;
}

}  // namespace

DpTable dp_solve(const DirectedHypergraph& h, const CostModel& cm) {
    DpTable t;
    t.value.resize(h.vertex_count());
    t.best_edges.resize(h.vertex_count());
    t.plan_count.assign(h.vertex_count(), 0);

    for (VertexId v : topo_order(h)) {
        if (h.is_seed(v)) {
            t.value[v] = seed_value(cm, h.compound(v));
            t.plan_count[v] = 1;
            continue;
        }
        for (EdgeId e : h.producers(v)) {
            const Hyperedge& he = h.edge(e);
            Rational cost;
            bool evaluable = true;
            Rational tails = 0;
            for (VertexId u : he.tail) {
                if (!t.value[u]) {
                    evaluable = false;
                    break;
                }
                tails += *t.value[u];
            }
            if (!evaluable) continue;
            if (cm.kind == CostKind::Additive)
                cost = (he.weight != 0 ? cm.affix_cost : cm.cycl_cost) + tails;
            else
                cost = cm.r * tails;
            if (!t.value[v] || cost < *t.value[v]) {
                t.value[v] = cost;
                t.best_edges[v] = {e};
            } else if (cost == *t.value[v]) {
                t.best_edges[v].push_back(e);
            }
        }
        std::sort(t.best_edges[v].begin(), t.best_edges[v].end());
        for (EdgeId e : t.best_edges[v]) {
            BigInt ways = 1;
            for (VertexId u : h.edge(e).tail) ways *= t.plan_count[u];
            t.plan_count[v] += ways;
        }
    }
    return t;
}

namespace {

struct PlanCounter {
    const DirectedHypergraph& h;
    const DpTable& table;
    std::uint64_t cap;
    BigInt count = 0;
    std::vector<char> resolved;
    std::set<VertexId> pending;

    void run() {
        if (pending.empty()) {
            if (++count > cap) throw ResourceLimitError("optimal plan cap exceeded");
            return;
        }
        VertexId v = *pending.begin();
        pending.erase(pending.begin());
        resolved[v] = 1;
        for (EdgeId e : table.best_edges[v]) {
            std::vector<VertexId> added;
            for (VertexId u : h.edge(e).tail)
                if (!resolved[u] && !h.is_seed(u) && pending.insert(u).second)
                    added.push_back(u);
            run();
            for (VertexId u : added) pending.erase(u);
        }
        resolved[v] = 0;
        pending.insert(v);
    }
};

}  // namespace

BigInt count_optimal_plans(const DirectedHypergraph& h, VertexId goal, const CostModel& cm,
                           std::uint64_t cap) {
    DpTable table = dp_solve(h, cm);
    if (!table.reachable(goal)) throw UnreachableError("goal is not assemblable from the seeds");
    PlanCounter pc{h, table, cap, 0, std::vector<char>(h.vertex_count(), 0), {}};
    if (!h.is_seed(goal)) pc.pending.insert(goal);
    pc.run();
    return pc.count;
}

Witness extract_plan(const DirectedHypergraph& h, const DpTable& table, VertexId goal) {
    if (goal >= h.vertex_count()) throw InvalidInputError("goal out of range");
    if (!table.reachable(goal)) throw UnreachableError("goal is not assemblable from the seeds");

    Witness w;
    w.objective = *table.value[goal];
    std::vector<char> seen(h.vertex_count(), 0);
    std::vector<VertexId> stack{goal};
    seen[goal] = 1;
    std::set<EdgeId> edges;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (h.is_seed(v)) continue;
        EdgeId e = table.best_edges[v].front();  // smallest optimal edge
        edges.insert(e);
        for (VertexId u : h.edge(e).tail)
            if (!seen[u]) {
                seen[u] = 1;
                stack.push_back(u);
            }
    }
    w.selected_edges.assign(edges.begin(), edges.end());
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (seen[v]) w.selected_vertices.push_back(v);
    for (EdgeId e : w.selected_edges)
        (h.edge(e).weight != 0 ? w.affixation_count : w.cyclization_count)++;
    w.order = validate_pathway(h, w, goal).order;
    return w;
}

int witness_depth(const DirectedHypergraph& h, const Witness& w) {
    std::vector<int> depth(h.vertex_count(), 0);
    std::vector<char> selected(h.vertex_count(), 0);
    for (VertexId v : w.selected_vertices) selected[v] = 1;
    // Realizability order is a valid evaluation order: tails settle first.
    int out = 0;
    for (EdgeId e : w.order) {
        const Hyperedge& he = h.edge(e);
        int d = 0;
        for (VertexId u : he.tail) d = std::max(d, depth[u]);
        for (VertexId v : he.head)
            if (selected[v]) {
                depth[v] = std::max(depth[v], d + 1);
                out = std::max(out, depth[v]);
            }
    }
    return out;
}

int max_depth_over_optimal_plans(const DirectedHypergraph& h, const DpTable& table,
                                 VertexId goal) {
    if (!table.reachable(goal)) throw UnreachableError("goal is not assemblable from the seeds");
    std::vector<int> depth(h.vertex_count(), -1);
    for (VertexId v : topo_order(h)) {
        if (h.is_seed(v)) {
            depth[v] = 0;
            continue;
        }
        for (EdgeId e : table.best_edges[v]) {
            int d = 0;
            bool evaluable = true;
            for (VertexId u : h.edge(e).tail) {
                if (depth[u] < 0) {
                    evaluable = false;
                    break;
                }
                d = std::max(d, depth[u]);
            }
            if (evaluable) depth[v] = std::max(depth[v], d + 1);
        }
    }
    return depth[goal];
}

DirectedHypergraph best_edge_subhypergraph(const DirectedHypergraph& h, const DpTable& table) {
    DirectedHypergraph sub;
    for (const auto& c : h.compounds()) sub.add_vertex(c.graph, c.code);
    for (VertexId v : h.seed_set()) sub.mark_seed(v);
    std::set<EdgeId> keep;
    for (const auto& list : table.best_edges) keep.insert(list.begin(), list.end());
    for (EdgeId e : keep) {
        const Hyperedge& he = h.edge(e);
        sub.add_edge(he.tail, he.head, he.weight, he.rule);
    }
    return sub;
}

}  // namespace asmbly
