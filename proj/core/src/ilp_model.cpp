#include <algorithm>
#include <sstream>

#include "asmbly/errors.hpp"
#include "asmbly/ilp.hpp"

namespace asmbly {

IlpModel::IlpModel(const DirectedHypergraph& h, VertexId goal, Objective obj)
    : h_(&h), goal_(goal), obj_(std::move(obj)) {
    if (goal >= h.vertex_count()) throw InvalidInputError("goal out of range");
    if (!is_acyclic(h)) throw InvalidInputError("hypergraph has a directed cycle");
    if (obj_.mode == ObjectiveMode::Custom && obj_.custom_costs.size() != h.edge_count())
        throw InvalidInputError("custom costs must cover every edge");

    std::vector<char> reach(h.vertex_count(), 0);
    for (VertexId v : reachable_from(h, h.seed_set())) reach[v] = 1;
    if (!reach[goal]) throw UnreachableError("goal is not assemblable from the seeds");

    cost_.resize(h.edge_count());
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        long long w = h.edge(e).weight;
        switch (obj_.mode) {
            case ObjectiveMode::MinAffixations: cost_[e] = w; break;
            case ObjectiveMode::LexAffixThenFewEdges: cost_[e] = 1000 * w + 1; break;
            case ObjectiveMode::MoreEdges: cost_[e] = 1000 * w - 1; break;
            case ObjectiveMode::Custom: cost_[e] = obj_.custom_costs[e]; break;
        }
    }
}

namespace {

/** Writes `terms` as an LP expression, wrapping long lines. */
void write_terms(std::ostringstream& out, const std::vector<std::pair<long long, std::string>>& terms) {
    int on_line = 0;
    bool first = true;
    for (const auto& [coef, var] : terms) {
        if (on_line == 8) {
            out << "\n   ";
            on_line = 0;
        }
        if (first) {
            if (coef < 0) out << "- ";
            first = false;
        } else {
            out << (coef < 0 ? " - " : " + ");
        }
        long long mag = coef < 0 ? -coef : coef;
        out << mag << " " << var;
        ++on_line;
    }
}

}  // namespace

std::string IlpModel::to_lp_text() const {
    const DirectedHypergraph& h = *h_;
    std::ostringstream out;
    out << "\\ affixation-minimal selection model\n";
    out << "Minimize\n obj: ";
    std::vector<std::pair<long long, std::string>> terms;
    for (EdgeId e = 0; e < h.edge_count(); ++e)
        if (cost_[e] != 0) terms.push_back({cost_[e], "x" + std::to_string(e)});
    if (terms.empty()) terms.push_back({0, "y" + std::to_string(goal_)});
    write_terms(out, terms);
    out << "\nSubject To\n";
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (h.is_seed(v)) continue;
        // exactly one producer for a selected vertex
        terms.clear();
        for (EdgeId e : h.producers(v)) terms.push_back({1, "x" + std::to_string(e)});
        terms.push_back({-1, "y" + std::to_string(v)});
        out << " prod_" << v << ": ";
        write_terms(out, terms);
        out << " = 0\n";
        for (EdgeId e : h.producers(v))
            out << " psup_" << v << "_" << e << ": y" << v << " - x" << e << " >= 0\n";
    }
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        VertexId last = static_cast<VertexId>(-1);
        for (VertexId u : h.edge(e).tail) {
            if (u == last) continue;  // tails are sorted; one row per distinct member
            last = u;
            out << " tsup_" << u << "_" << e << ": y" << u << " - x" << e << " >= 0\n";
        }
    }
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        if (h.is_seed(v) || v == goal_) continue;
        // a selected intermediate must be consumed
        terms.clear();
        for (EdgeId e : h.consumers(v)) terms.push_back({1, "x" + std::to_string(e)});
        terms.push_back({-1, "y" + std::to_string(v)});
        out << " cons_" << v << ": ";
        write_terms(out, terms);
        out << " >= 0\n";
    }
    out << "Bounds\n y" << goal_ << " = 1\nBinaries\n";
    int on_line = 0;
    for (EdgeId e = 0; e < h.edge_count(); ++e) {
        out << " x" << e;
        if (++on_line == 16) {
            out << "\n";
            on_line = 0;
        }
    }
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        out << " y" << v;
        if (++on_line == 16) {
            out << "\n";
            on_line = 0;
        }
    }
    if (on_line != 0) out << "\n";
    out << "End\n";
    return out.str();
}

}  // namespace asmbly
