#include "asmbly/hypergraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "asmbly/errors.hpp"

namespace asmbly {

VertexId DirectedHypergraph::add_vertex(LabeledGraph g) {
    return add_vertex(std::move(g), canonical_form(g));
}

VertexId DirectedHypergraph::add_vertex(LabeledGraph g, CanonicalCode code) {
    auto it = std::lower_bound(index_.begin(), index_.end(), code.code,
                               [](const auto& entry, const std::string& key) {
                                   return entry.first < key;
                               });
    if (it != index_.end() && it->first == code.code) return it->second;
    VertexId id = static_cast<VertexId>(vertices_.size());
    index_.insert(it, {code.code, id});
    vertices_.push_back({id, std::move(code), std::move(g)});
    seed_.push_back(false);
    producers_.emplace_back();
    consumers_.emplace_back();
    return id;
}

EdgeId DirectedHypergraph::add_edge(std::vector<VertexId> tail, std::vector<VertexId> head,
                                    int weight, RuleKind rule) {
    if (tail.empty() || head.empty()) throw InvalidInputError("hyperedge with empty tail or head");
    for (VertexId v : tail)
        if (v >= vertices_.size()) throw InvalidInputError("tail vertex out of range");
    for (VertexId v : head)
        if (v >= vertices_.size()) throw InvalidInputError("head vertex out of range");
    std::sort(tail.begin(), tail.end());
    std::sort(head.begin(), head.end());
    EdgeId id = static_cast<EdgeId>(edges_.size());
    for (std::size_t i = 0; i < tail.size(); ++i)
        if (i == 0 || tail[i] != tail[i - 1]) consumers_[tail[i]].push_back(id);
    for (std::size_t i = 0; i < head.size(); ++i)
        if (i == 0 || head[i] != head[i - 1]) producers_[head[i]].push_back(id);
    edges_.push_back({std::move(tail), std::move(head), weight, rule});
    return id;
}

void DirectedHypergraph::mark_seed(VertexId v) {
    if (v >= seed_.size()) throw InvalidInputError("seed id " + std::to_string(v) + " out of range");
    seed_[v] = true;
}

std::vector<VertexId> DirectedHypergraph::seed_set() const {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < seed_.size(); ++v)
        if (seed_[v]) out.push_back(v);
    return out;
}

std::optional<VertexId> DirectedHypergraph::find(const CanonicalCode& code) const {
    auto it = std::lower_bound(index_.begin(), index_.end(), code.code,
                               [](const auto& entry, const std::string& key) {
                                   return entry.first < key;
                               });
    if (it != index_.end() && it->first == code.code) return it->second;
    return std::nullopt;
}

std::vector<VertexId> reachable_from(const DirectedHypergraph& h,
                                     const std::vector<VertexId>& sources) {
    std::vector<bool> reached(h.vertex_count(), false);
    std::vector<std::size_t> missing(h.edge_count());
    std::queue<VertexId> queue;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        std::size_t distinct = 0;
        const auto& tail = h.edge(e).tail;
        for (std::size_t i = 0; i < tail.size(); ++i)
            if (i == 0 || tail[i] != tail[i - 1]) ++distinct;
        missing[e] = distinct;
    }
    auto visit = [&](VertexId v) {
        if (reached[v]) return;
        reached[v] = true;
        queue.push(v);
    };
    for (VertexId v : sources) {
        if (v >= h.vertex_count()) throw InvalidInputError("source vertex out of range");
        visit(v);
    }
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : h.consumers(v)) {
            if (missing[e] == 0 || --missing[e] > 0) continue;
            for (VertexId head : h.edge(e).head) visit(head);
        }
    }
    std::vector<VertexId> out;
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (reached[v]) out.push_back(v);
    return out;
}

bool is_grounded(const DirectedHypergraph& h) {
    return reachable_from(h, h.seed_set()).size() == h.vertex_count();
}

DirectedHypergraph to_b_hypergraph(const DirectedHypergraph& h) {
    DirectedHypergraph b;
    for (const auto& c : h.compounds()) b.add_vertex(c.graph, c.code);
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (h.is_seed(v)) b.mark_seed(v);
    for (const auto& e : h.edges())
        for (VertexId head : e.head) b.add_edge(e.tail, {head}, e.weight, e.rule);
    return b;
}

DirectedHypergraph restrict_below(const DirectedHypergraph& h, VertexId x) {
    if (x >= h.vertex_count()) throw InvalidInputError("restriction vertex out of range");
    // Backward closure under "appears in the tail of an edge producing a kept vertex".
    std::vector<bool> keep(h.vertex_count(), false);
    keep[x] = true;
    std::queue<VertexId> queue;
    queue.push(x);
    std::vector<bool> edge_done(h.edge_count(), false);
    while (!queue.empty()) {
        VertexId v = queue.front();
        queue.pop();
        for (EdgeId e : h.producers(v)) {
            if (edge_done[e]) continue;
            edge_done[e] = true;
            for (VertexId t : h.edge(e).tail)
                if (!keep[t]) {
                    keep[t] = true;
                    queue.push(t);
                }
        }
    }
    DirectedHypergraph out;
    std::vector<VertexId> remap(h.vertex_count(), 0);
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (keep[v]) {
            remap[v] = out.add_vertex(h.compound(v).graph, h.compound(v).code);
            if (h.is_seed(v)) out.mark_seed(remap[v]);
        }
    for (const auto& e : h.edges()) {
        bool head_kept = std::any_of(e.head.begin(), e.head.end(),
                                     [&](VertexId v) { return keep[v]; });
        if (!head_kept) continue;
        std::vector<VertexId> tail, head;
        for (VertexId t : e.tail) tail.push_back(remap[t]);
        for (VertexId v : e.head)
            if (keep[v]) head.push_back(remap[v]);
        out.add_edge(std::move(tail), std::move(head), e.weight, e.rule);
    }
    return out;
}

bool is_acyclic(const DirectedHypergraph& h) {
    // DFS over the vertex->edge->vertex incidence digraph.
    enum { White, Grey, Black };
    std::vector<char> state(h.vertex_count(), White);
    std::vector<VertexId> stack;
    for (VertexId start = 0; start < h.vertex_count(); ++start) {
        if (state[start] != White) continue;
        stack.push_back(start);
        std::vector<std::pair<VertexId, std::size_t>> frames{{start, 0}};
        state[start] = Grey;
        while (!frames.empty()) {
            auto& [v, next] = frames.back();
            // successors of v: heads of edges consuming v
            std::optional<VertexId> succ;
            std::size_t count = 0;
            for (EdgeId e : h.consumers(v)) {
                const auto& heads = h.edge(e).head;
                if (next < count + heads.size()) {
                    succ = heads[next - count];
                    break;
                }
                count += heads.size();
            }
            if (!succ) {
                state[v] = Black;
                frames.pop_back();
                continue;
            }
            ++next;
            if (state[*succ] == Grey) return false;
            if (state[*succ] == White) {
                state[*succ] = Grey;
                frames.push_back({*succ, 0});
            }
        }
    }
    return true;
}

ValidationReport validate_pathway(const DirectedHypergraph& h, const Witness& w, VertexId target) {
    ValidationReport report;
    auto fail = [&](std::string why) {
        report.passed = false;
        report.failure = std::move(why);
        return report;
    };

    std::vector<bool> selected_v(h.vertex_count(), false);
    for (VertexId v : w.selected_vertices) {
        if (v >= h.vertex_count()) return fail("selected vertex out of range");
        selected_v[v] = true;
    }
    std::vector<bool> selected_e(h.edge_count(), false);
    for (EdgeId e : w.selected_edges) {
        if (e >= h.edge_count()) return fail("selected edge out of range");
        if (selected_e[e]) return fail("edge " + std::to_string(e) + " selected twice");
        selected_e[e] = true;
    }
    for (EdgeId e : w.selected_edges) {
        for (VertexId v : h.edge(e).tail)
            if (!selected_v[v]) return fail("edge tail vertex not selected");
        for (VertexId v : h.edge(e).head)
            if (!selected_v[v]) return fail("edge head vertex not selected");
    }
    if (target >= h.vertex_count() || !selected_v[target]) return fail("target not selected");
    for (EdgeId e : w.selected_edges)
        for (VertexId v : h.edge(e).tail)
            if (v == target) return fail("target is consumed by a selected edge");

    // Greedy realizability order: schedule the lowest-id edge whose tail is
    // fully available (seeds plus heads of already-scheduled edges).
    std::vector<bool> available(h.vertex_count(), false);
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (h.is_seed(v) && selected_v[v]) available[v] = true;
    std::vector<EdgeId> pending = w.selected_edges;
    std::sort(pending.begin(), pending.end());
    std::vector<bool> done(pending.size(), false);
    std::size_t scheduled = 0;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t i = 0; i < pending.size(); ++i) {
            if (done[i]) continue;
            const auto& e = h.edge(pending[i]);
            bool ready = std::all_of(e.tail.begin(), e.tail.end(),
                                     [&](VertexId v) { return available[v]; });
            if (!ready) continue;
            done[i] = true;
            ++scheduled;
            report.order.push_back(pending[i]);
            for (VertexId v : e.head) available[v] = true;
            progress = true;
            break;  // restart the scan so the lowest-id runnable edge goes next
        }
    }
    if (scheduled != pending.size()) {
        for (std::size_t i = 0; i < pending.size(); ++i)
            if (!done[i]) report.stuck_edges.push_back(pending[i]);
        return fail("no realizability order: " + std::to_string(report.stuck_edges.size()) +
                    " edge(s) can never run");
    }
    // Groundedness of the selection: every selected vertex must be available.
    for (VertexId v = 0; v < h.vertex_count(); ++v)
        if (selected_v[v] && !available[v])
            return fail("selected vertex " + std::to_string(v) +
                        " is neither a seed nor produced");
    report.passed = true;
    return report;
}

}  // namespace asmbly
