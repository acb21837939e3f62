#include <nlohmann/json.hpp>
#include <sstream>

#include "asmbly/errors.hpp"
#include "asmbly/hypergraph.hpp"

namespace asmbly {

using Json = nlohmann::ordered_json;

namespace {

const char* rule_name(RuleKind r) {
    return r == RuleKind::VertexSplit ? "vertex-split" : "edge-removal";
}

RuleKind rule_from_name(const std::string& s) {
    if (s == "vertex-split") return RuleKind::VertexSplit;
    if (s == "edge-removal") return RuleKind::EdgeRemoval;
    throw ParseError("unknown rule kind '" + s + "'");
}

Json graph_to_json(const LabeledGraph& g) {
    Json j;
    j["vertices"] = Json::array();
    for (std::uint32_t v = 0; v < g.vertex_count(); ++v) j["vertices"].push_back(g.label(v));
    j["bonds"] = Json::array();
    for (const auto& e : g.edges())
        j["bonds"].push_back(Json::array({e.u, e.v, static_cast<int>(e.order)}));
    return j;
}

LabeledGraph graph_from_json(const Json& j) {
    LabeledGraph g;
    for (const auto& l : j.at("vertices")) g.add_vertex(l.get<std::string>());
    for (const auto& b : j.at("bonds")) {
        int order = b.at(2).get<int>();
        if (order < 1 || order > 4) throw ParseError("bond order out of range");
        g.add_edge(b.at(0).get<std::uint32_t>(), b.at(1).get<std::uint32_t>(),
                   static_cast<Bond>(order));
    }
    return g;
}

Json parse_root(const std::string& text, const char* format) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || j.value("format", "") != format)
        throw ParseError(std::string("expected a '") + format + "' document");
    return j;
}

}  // namespace

std::string hypergraph_to_json(const DirectedHypergraph& h, std::optional<VertexId> target) {
    Json j;
    j["format"] = "asmbly-hypergraph";
    j["version"] = 1;
    if (target) j["target"] = *target;
    j["seeds"] = h.seed_set();
    j["compounds"] = Json::array();
    for (const auto& c : h.compounds()) {
        Json jc;
        jc["id"] = c.id;
        jc["code"] = c.code.code;
        jc["graph"] = graph_to_json(c.graph);
        j["compounds"].push_back(std::move(jc));
    }
    j["edges"] = Json::array();
    for (const auto& e : h.edges()) {
        Json je;
        je["tail"] = e.tail;
        je["head"] = e.head;
        je["weight"] = e.weight;
        je["rule"] = rule_name(e.rule);
        j["edges"].push_back(std::move(je));
    }
    return j.dump(2) + "\n";
}

std::pair<DirectedHypergraph, std::optional<VertexId>> hypergraph_from_json(
    const std::string& text) {
    Json j = parse_root(text, "asmbly-hypergraph");
    DirectedHypergraph h;
    for (const auto& jc : j.at("compounds")) {
        LabeledGraph g = graph_from_json(jc.at("graph"));
        VertexId id = h.add_vertex(std::move(g));
        if (id != jc.at("id").get<VertexId>())
            throw ParseError("compound ids must be dense, ascending, and pairwise distinct");
        if (jc.contains("code") && jc["code"].get<std::string>() != h.compound(id).code.code)
            throw ParseError("stored canonical code disagrees with the graph");
    }
    for (const auto& s : j.value("seeds", Json::array())) {
        VertexId v = s.get<VertexId>();
        if (v >= h.vertex_count()) throw ParseError("seed id out of range");
        h.mark_seed(v);
    }
    for (const auto& je : j.at("edges")) {
        try {
            h.add_edge(je.at("tail").get<std::vector<VertexId>>(),
                       je.at("head").get<std::vector<VertexId>>(), je.at("weight").get<int>(),
                       rule_from_name(je.at("rule").get<std::string>()));
        } catch (const InvalidInputError& e) {
            throw ParseError(std::string("bad edge: ") + e.what());
        }
    }
    std::optional<VertexId> target;
    if (j.contains("target")) {
        target = j["target"].get<VertexId>();
        if (*target >= h.vertex_count()) throw ParseError("target id out of range");
    }
    return {std::move(h), target};
}

std::string witness_to_json(const DirectedHypergraph& h, const Witness& w) {
    (void)h;
    Json j;
    j["format"] = "asmbly-witness";
    j["version"] = 1;
    j["objective"] = rational_to_string(w.objective);
    j["affixations"] = w.affixation_count;
    j["cyclizations"] = w.cyclization_count;
    j["edges"] = w.selected_edges;
    j["vertices"] = w.selected_vertices;
    j["order"] = w.order;
    return j.dump(2) + "\n";
}

Witness witness_from_json(const DirectedHypergraph& h, const std::string& text) {
    Json j = parse_root(text, "asmbly-witness");
    Witness w;
    w.objective = parse_rational(j.at("objective").get<std::string>());
    w.affixation_count = j.at("affixations").get<int>();
    w.cyclization_count = j.at("cyclizations").get<int>();
    w.selected_edges = j.at("edges").get<std::vector<EdgeId>>();
    w.selected_vertices = j.at("vertices").get<std::vector<VertexId>>();
    w.order = j.value("order", std::vector<EdgeId>{});
    for (EdgeId e : w.selected_edges)
        if (e >= h.edge_count()) throw ParseError("witness edge id out of range");
    for (VertexId v : w.selected_vertices)
        if (v >= h.vertex_count()) throw ParseError("witness vertex id out of range");
    return w;
}

std::string witness_to_dot(const DirectedHypergraph& h, const Witness& w) {
    std::ostringstream out;
    out << "digraph witness {\n  rankdir=BT;\n";
    out << "  node [fontname=\"Helvetica\"];\n";
    for (VertexId v : w.selected_vertices) {
        const Compound& c = h.compound(v);
        out << "  v" << v << " [shape=box, label=\"" << formula(c.graph) << " #" << v << "\\n"
            << c.graph.vertex_count() << "v " << c.graph.edge_count() << "e\"";
        if (h.is_seed(v)) out << ", peripheries=2";
        out << "];\n";
    }
    for (EdgeId e : w.selected_edges) {
        const Hyperedge& he = h.edge(e);
        out << "  e" << e << " [shape=square, width=0.2, fixedsize=true, label=\"" << he.weight
            << "\"];\n";
        for (VertexId u : he.tail) out << "  v" << u << " -> e" << e << ";\n";
        for (VertexId u : he.head) out << "  e" << e << " -> v" << u << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace asmbly
