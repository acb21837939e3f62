#include "asmbly/rewrite.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <thread>

#include "asmbly/errors.hpp"

namespace asmbly {

namespace {

struct Parts {
    std::vector<LabeledGraph> graphs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> where;  // vertex -> (part, local id)
};

Parts split_components(const LabeledGraph& g) {
    Parts parts;
    std::vector<int> comp(g.vertex_count(), -1);
    parts.where.resize(g.vertex_count());
    for (std::uint32_t s = 0; s < g.vertex_count(); ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(parts.graphs.size());
        parts.graphs.emplace_back();
        std::queue<std::uint32_t> q;
        comp[s] = id;
        q.push(s);
        while (!q.empty()) {
            auto v = q.front();
            q.pop();
            parts.where[v] = {static_cast<std::uint32_t>(id),
                              parts.graphs[id].add_vertex(g.label(v))};
            for (auto [w, o] : g.neighbors(v))
                if (comp[w] < 0) {
                    comp[w] = id;
                    q.push(w);
                }
        }
    }
    for (const auto& e : g.edges()) {
        auto [pu, lu] = parts.where[e.u];
        auto [pv, lv] = parts.where[e.v];
        parts.graphs[pu].add_edge(lu, lv, e.order);
    }
    return parts;
}

// Sort key: fragment codes ascending; used both for determinism and dedup.
std::vector<std::string> step_key(const DisassemblyStep& s) {
    std::vector<std::string> key = s.fragment_codes;
    std::sort(key.begin(), key.end());
    return key;
}

}  // namespace

std::vector<DisassemblyStep> enumerate_vertex_splits(const LabeledGraph& g) {
    if (is_atomic(g) || is_base_compound(g))
        throw InvalidInputError("vertex split needs a compound larger than a single bond");
    std::map<std::vector<std::string>, DisassemblyStep> steps;
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.neighbors(v);
        std::size_t d = inc.size();
        if (d < 2) continue;
        // Unordered bipartitions of the incident bonds: masks with bit 0 clear.
        for (std::uint32_t mask = 1; mask < (1u << (d - 1)); ++mask) {
            LabeledGraph split;
            std::vector<std::uint32_t> remap(g.vertex_count());
            for (std::uint32_t u = 0; u < g.vertex_count(); ++u)
                remap[u] = split.add_vertex(g.label(u));
            std::uint32_t twin = split.add_vertex(g.label(v));
            for (const auto& e : g.edges()) {
                std::uint32_t a = remap[e.u], b = remap[e.v];
                if (e.u == v || e.v == v) {
                    std::uint32_t nbr = (e.u == v) ? e.v : e.u;
                    std::size_t slot = 0;
                    while (inc[slot].first != nbr) ++slot;
                    bool keep = (slot == 0) || ((mask >> (slot - 1)) & 1u) == 0;
                    if (!keep) {
                        if (e.u == v) a = twin;
                        else b = twin;
                    }
                }
                split.add_edge(a, b, e.order);
            }
            Parts parts = split_components(split);
            DisassemblyStep step;
            step.rule = RuleKind::VertexSplit;
            step.kind = parts.graphs.size() == 1 ? StepKind::Cyclization : StepKind::Affixation;
            auto [pa, la] = parts.where[remap[v]];
            auto [pb, lb] = parts.where[twin];
            step.a = {pa, la};
            step.b = {pb, lb};
            step.site = "split " + std::to_string(v) + " mask " + std::to_string(mask);
            step.fragments = std::move(parts.graphs);
            for (const auto& f : step.fragments)
                step.fragment_codes.push_back(canonical_form(f).code);
            steps.emplace(step_key(step), std::move(step));
        }
    }
    std::vector<DisassemblyStep> out;
    out.reserve(steps.size());
    for (auto& [key, step] : steps) out.push_back(std::move(step));
    return out;
}

std::vector<DisassemblyStep> enumerate_edge_removals(const LabeledGraph& g) {
    if (g.edge_count() == 0) throw InvalidInputError("edge removal needs at least one bond");
    std::map<std::vector<std::string>, DisassemblyStep> steps;
    for (std::size_t skip = 0; skip < g.edge_count(); ++skip) {
        LabeledGraph cut;
        for (std::uint32_t u = 0; u < g.vertex_count(); ++u) cut.add_vertex(g.label(u));
        for (std::size_t i = 0; i < g.edge_count(); ++i)
            if (i != skip) cut.add_edge(g.edges()[i].u, g.edges()[i].v, g.edges()[i].order);
        Parts parts = split_components(cut);
        const auto& removed = g.edges()[skip];
        DisassemblyStep step;
        step.rule = RuleKind::EdgeRemoval;
        step.kind = parts.graphs.size() == 1 ? StepKind::Cyclization : StepKind::Affixation;
        step.a = {parts.where[removed.u].first, parts.where[removed.u].second};
        step.b = {parts.where[removed.v].first, parts.where[removed.v].second};
        step.bond = removed.order;
        step.site =
            "remove " + std::to_string(removed.u) + "-" + std::to_string(removed.v);
        step.fragments = std::move(parts.graphs);
        for (const auto& f : step.fragments)
            step.fragment_codes.push_back(canonical_form(f).code);
        steps.emplace(step_key(step), std::move(step));
    }
    std::vector<DisassemblyStep> out;
    out.reserve(steps.size());
    for (auto& [key, step] : steps) out.push_back(std::move(step));
    return out;
}

namespace {

std::vector<DisassemblyStep> enumerate_rule(const LabeledGraph& g, RuleKind rule) {
    return rule == RuleKind::VertexSplit ? enumerate_vertex_splits(g) : enumerate_edge_removals(g);
}

}  // namespace

Expansion expand(const LabeledGraph& target, RuleKind rule, const ExpansionOptions& opts) {
    if (target.vertex_count() == 0) throw InvalidInputError("empty target");
    if (!is_connected(target)) throw InvalidInputError("target must be connected");

    // Vertex splits cannot take a base compound apart; edge removals can.
    bool base_terminal = rule == RuleKind::VertexSplit;

    Expansion x;
    x.target = x.h.add_vertex(target);
    if (is_atomic(target) || (base_terminal && is_base_compound(target))) {
        x.h.mark_seed(x.target);
        return x;
    }

    auto started = std::chrono::steady_clock::now();
    auto check_budget = [&]() {
        if (x.h.vertex_count() > opts.max_compounds)
            throw ResourceLimitError("compound cap exceeded (" +
                                     std::to_string(opts.max_compounds) + ")");
        if (x.h.edge_count() > opts.max_edges)
            throw ResourceLimitError("hyperedge cap exceeded (" + std::to_string(opts.max_edges) +
                                     ")");
        if (opts.wall_budget.count() > 0 &&
            std::chrono::steady_clock::now() - started > opts.wall_budget)
            throw ResourceLimitError("wall clock budget exceeded");
    };

    std::deque<VertexId> frontier{x.target};
    unsigned threads = std::max(1u, opts.threads);
    while (!frontier.empty()) {
        // One level at a time: parallel step enumeration, sequential merge in
        // level order keeps interning (and so all ids) deterministic.
        std::vector<VertexId> level(frontier.begin(), frontier.end());
        frontier.clear();
        std::vector<LabeledGraph> graphs;
        graphs.reserve(level.size());
        for (VertexId v : level) graphs.push_back(x.h.compound(v).graph);

        std::vector<std::vector<DisassemblyStep>> steps(level.size());
        if (threads <= 1 || level.size() == 1) {
            for (std::size_t i = 0; i < level.size(); ++i) steps[i] = enumerate_rule(graphs[i], rule);
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (level.size() + threads - 1) / threads;
            for (unsigned t = 0; t < threads; ++t) {
                std::size_t lo = t * chunk, hi = std::min(level.size(), lo + chunk);
                if (lo >= hi) break;
                pool.emplace_back([&, lo, hi]() {
                    for (std::size_t i = lo; i < hi; ++i) steps[i] = enumerate_rule(graphs[i], rule);
                });
            }
            for (auto& th : pool) th.join();
        }

        for (std::size_t i = 0; i < level.size(); ++i) {
            VertexId parent = level[i];
            for (auto& step : steps[i]) {
                if (opts.cyclization_only && step.kind != StepKind::Cyclization) continue;
                std::vector<VertexId> tail;
                for (std::size_t f = 0; f < step.fragments.size(); ++f) {
                    const LabeledGraph& frag = step.fragments[f];
                    CanonicalCode code{step.fragment_codes[f]};
                    std::size_t before = x.h.vertex_count();
                    VertexId fid = x.h.add_vertex(frag, code);
                    if (x.h.vertex_count() > before) {
                        if (is_atomic(frag) || (base_terminal && is_base_compound(frag)))
                            x.h.mark_seed(fid);
                        else
                            frontier.push_back(fid);
                    }
                    tail.push_back(fid);
                }
                x.h.add_edge(std::move(tail), {parent}, step.kind == StepKind::Affixation ? 1 : 0,
                             rule);
            }
            check_budget();
        }
    }
    return x;
}

std::vector<CanonicalCode> decyclization_closure(const LabeledGraph& target,
                                                 const ExpansionOptions& opts) {
    ExpansionOptions o = opts;
    o.cyclization_only = true;
    Expansion x = expand(target, RuleKind::VertexSplit, o);
    std::vector<CanonicalCode> out;
    out.reserve(x.h.vertex_count());
    for (const auto& c : x.h.compounds()) out.push_back(c.code);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace asmbly
