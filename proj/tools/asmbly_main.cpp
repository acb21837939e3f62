// asmbly: expansion, exact index solving, DP cost measures, witness export.
// Stdout carries the deterministic report; timings go to stderr. Exit codes:
// 0 ok, 1 unreachable goal, 2 bad input, 3 resource cap.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "asmbly/dp.hpp"
#include "asmbly/errors.hpp"
#include "asmbly/grammar.hpp"
#include "asmbly/hypergraph.hpp"
#include "asmbly/ilp.hpp"
#include "asmbly/molgraph.hpp"
#include "asmbly/rational.hpp"
#include "asmbly/rewrite.hpp"

namespace {

using namespace asmbly;
using Clock = std::chrono::steady_clock;

struct RunConfig {
    std::string input;
    std::string format = "auto";  // auto | edgelist | smiles
    std::string rule = "split";   // split | edge
    std::string out;              // output directory, empty = stdout only
    unsigned threads = 1;
    std::size_t max_compounds = 2'000'000;
    std::size_t max_edges = 20'000'000;
};

class Timer {
public:
    explicit Timer(const char* phase) : phase_(phase), start_(Clock::now()) {}
    ~Timer() {
        auto ms = std::chrono::duration<double, std::milli>(Clock::now() - start_).count();
        std::fprintf(stderr, "%s: %.0f ms\n", phase_, ms);
    }

private:
    const char* phase_;
    Clock::time_point start_;
};

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& dir, const std::string& name, const std::string& text) {
    std::filesystem::create_directories(dir);
    std::string path = dir + "/" + name;
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ParseError("cannot write " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

LabeledGraph load_graph(const RunConfig& cfg) {
    std::string text = read_file(cfg.input);
    std::string fmt = cfg.format;
    if (fmt == "auto")
        fmt = (ends_with(cfg.input, ".smi") || ends_with(cfg.input, ".smiles")) ? "smiles"
                                                                                : "edgelist";
    if (fmt == "smiles") {
        // first non-empty, non-comment line
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            auto pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            auto end = line.find_last_not_of(" \t\r");
            return parse_smiles(line.substr(pos, end - pos + 1));
        }
        throw ParseError("no SMILES string in " + cfg.input);
    }
    return parse_graph_text(text);
}

RuleKind rule_kind(const RunConfig& cfg) {
    return cfg.rule == "edge" ? RuleKind::EdgeRemoval : RuleKind::VertexSplit;
}

ExpansionOptions expansion_options(const RunConfig& cfg, bool cyclization_only = false) {
    ExpansionOptions opts;
    opts.max_compounds = cfg.max_compounds;
    opts.max_edges = cfg.max_edges;
    opts.threads = cfg.threads;
    opts.cyclization_only = cyclization_only;
    return opts;
}

void print_expansion_summary(const Expansion& x) {
    std::printf("vertices=%zu edges=%zu seeds=%zu\n", x.h.vertex_count(), x.h.edge_count(),
                x.h.seed_set().size());
}

// --- subcommands ------------------------------------------------------------

int cmd_expand(const RunConfig& cfg, bool cyclization_only) {
    LabeledGraph g = load_graph(cfg);
    Expansion x;
    {
        Timer t("expand");
        x = expand(g, rule_kind(cfg), expansion_options(cfg, cyclization_only));
    }
    print_expansion_summary(x);
    if (!cfg.out.empty()) write_file(cfg.out, "hypergraph.json", hypergraph_to_json(x.h, x.target));
    return 0;
}

int cmd_index(const RunConfig& cfg, bool emit_lp) {
    LabeledGraph g = load_graph(cfg);
    Expansion x;
    {
        Timer t("expand");
        x = expand(g, rule_kind(cfg), expansion_options(cfg));
    }
    IlpModel model(x.h, x.target);
    IlpSolution sol;
    {
        Timer t("solve");
        sol = solve(model);
    }
    const Witness& w = sol.witness;
    std::printf("index=%d\n", w.affixation_count);
    std::printf("affixations=%d cyclizations=%d depth=%d edges=%zu\n", w.affixation_count,
                w.cyclization_count, witness_depth(x.h, w), w.selected_edges.size());
    print_expansion_summary(x);
    if (!cfg.out.empty()) {
        write_file(cfg.out, "witness.json", witness_to_json(x.h, w));
        write_file(cfg.out, "witness.dot", witness_to_dot(x.h, w));
        if (emit_lp) write_file(cfg.out, "model.lp", model.to_lp_text());
    }
    return 0;
}

int cmd_witnesses(const RunConfig& cfg, std::size_t limit) {
    LabeledGraph g = load_graph(cfg);
    Expansion x;
    {
        Timer t("expand");
        x = expand(g, rule_kind(cfg), expansion_options(cfg));
    }
    IlpModel model(x.h, x.target);
    std::vector<Witness> ws;
    {
        Timer t("enumerate");
        ws = enumerate_optimal_witnesses(model, limit);
    }
    long long optimum = 0;
    std::map<int, std::size_t> by_depth;
    for (const Witness& w : ws) by_depth[witness_depth(x.h, w)]++;
    if (!ws.empty()) optimum = (long long)numerator(ws.front().objective);
    std::printf("optimum=%lld witnesses=%zu\n", optimum, ws.size());
    for (auto [depth, count] : by_depth) std::printf("depth=%d count=%zu\n", depth, count);
    if (!cfg.out.empty())
        for (std::size_t i = 0; i < ws.size(); ++i)
            write_file(cfg.out, "witness_" + std::to_string(i) + ".json",
                       witness_to_json(x.h, ws[i]));
    return 0;
}

CostModel cost_model(const std::string& cost, const std::string& affix, const std::string& cycl,
                     const std::string& r, const std::string& seed_weight) {
    CostModel cm;
    cm.kind = cost == "additive" ? CostKind::Additive : CostKind::RetroYield;
    cm.affix_cost = parse_rational(affix);
    cm.cycl_cost = parse_rational(cycl);
    cm.r = parse_rational(r);
    if (cm.kind == CostKind::RetroYield && cm.r <= 1)
        throw InvalidInputError("--r must be > 1");
    if (seed_weight == "one")
        cm.seed_weight = [](const Compound&) { return Rational(1); };
    return cm;
}

int cmd_dp(const RunConfig& cfg, const CostModel& cm) {
    LabeledGraph g = load_graph(cfg);
    Expansion x;
    {
        Timer t("expand");
        x = expand(g, rule_kind(cfg), expansion_options(cfg));
    }
    DpTable table;
    {
        Timer t("dp");
        table = dp_solve(x.h, cm);
    }
    if (!table.reachable(x.target)) throw UnreachableError("target not reachable from seeds");
    Witness plan = extract_plan(x.h, table, x.target);
    std::printf("value=%s plans=%s shared_plans=%s depth=%d minaffix=%d\n",
                rational_to_string(*table.value[x.target]).c_str(),
                table.plan_count[x.target].str().c_str(),
                count_optimal_plans(x.h, x.target, cm).str().c_str(),
                max_depth_over_optimal_plans(x.h, table, x.target),
                min_affixations_over_optimal_plans(x.h, table, x.target));
    std::printf("plan: affixations=%d cyclizations=%d depth=%d\n", plan.affixation_count,
                plan.cyclization_count, witness_depth(x.h, plan));
    if (!cfg.out.empty()) {
        write_file(cfg.out, "plan.json", witness_to_json(x.h, plan));
        write_file(cfg.out, "plan.dot", witness_to_dot(x.h, plan));
    }
    return 0;
}

int cmd_compare(const RunConfig& cfg, const CostModel& cm) {
    LabeledGraph g = load_graph(cfg);
    Expansion x;
    {
        Timer t("expand");
        x = expand(g, rule_kind(cfg), expansion_options(cfg));
    }
    IlpSolution sol;
    {
        Timer t("solve");
        sol = solve(IlpModel(x.h, x.target));
    }
    DpTable table;
    {
        Timer t("dp");
        table = dp_solve(x.h, cm);
    }
    if (!table.reachable(x.target)) throw UnreachableError("target not reachable from seeds");
    Witness plan = extract_plan(x.h, table, x.target);
    std::printf("ilp: cost=%lld affixations=%d cyclizations=%d depth=%d\n", sol.objective,
                sol.witness.affixation_count, sol.witness.cyclization_count,
                witness_depth(x.h, sol.witness));
    std::printf("dp: value=%s affixations=%d cyclizations=%d depth=%d\n",
                rational_to_string(*table.value[x.target]).c_str(), plan.affixation_count,
                plan.cyclization_count, witness_depth(x.h, plan));
    return 0;
}

int cmd_grammar(const RunConfig& cfg) {
    LabeledGraph g = load_graph(cfg);
    Expansion x;
    {
        Timer t("expand");
        x = expand(g, rule_kind(cfg), expansion_options(cfg));
    }
    IlpSolution sol;
    {
        Timer t("solve");
        sol = solve(IlpModel(x.h, x.target));
    }
    Cfg cfg0 = cfg_from_witness(x.h, sol.witness, x.target);
    Cfg cnf = to_cnf(cfg0);
    std::printf("rules=%zu terminals=%zu string_length=%zu\n", cfg0.rules.size(),
                cfg0.terminals.size(), expand_string(cfg0).size());
    std::printf("cnf_rules=%zu cnf_nonterminals=%zu\n", cnf.rules.size(), cnf.nonterminals.size());
    if (!cfg.out.empty()) {
        write_file(cfg.out, "grammar.txt", cfg_to_text(cfg0));
        write_file(cfg.out, "grammar_cnf.txt", cfg_to_text(cnf));
    }
    return 0;
}

int cmd_validate(const std::string& hypergraph_path, const std::string& witness_path) {
    auto [h, target] = hypergraph_from_json(read_file(hypergraph_path));
    if (!target) throw InvalidInputError("hypergraph file does not name a target");
    Witness w = witness_from_json(h, read_file(witness_path));
    ValidationReport report = validate_pathway(h, w, *target);
    if (report.passed) {
        std::printf("valid=1 order_length=%zu\n", report.order.size());
        return 0;
    }
    std::printf("valid=0 failure=%s\n", report.failure.c_str());
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;
    CLI::App app{"assembly hypergraph toolkit: expansion, exact indices, DP costs, witnesses"};
    app.require_subcommand(1);
    app.add_option("--rule", cfg.rule, "disassembly rule")
        ->check(CLI::IsMember({"split", "edge"}))
        ->capture_default_str();
    app.add_option("--format", cfg.format, "input format")
        ->check(CLI::IsMember({"auto", "edgelist", "smiles"}))
        ->capture_default_str();
    app.add_option("--out", cfg.out, "directory for result files (default: stdout only)");
    app.add_option("--threads", cfg.threads, "worker threads for expansion")
        ->capture_default_str();
    app.add_option("--max-compounds", cfg.max_compounds, "expansion vertex cap")
        ->capture_default_str();
    app.add_option("--max-edges", cfg.max_edges, "expansion hyperedge cap")
        ->capture_default_str();

    std::string input, witness_path;
    bool cyclization_only = false, emit_lp = false;
    std::size_t limit = 100;
    std::string cost = "retro-yield", affix = "1", cycl = "1", r = "5/4", seed_weight = "atoms";

    auto add_input = [&](CLI::App* sub) {
        sub->fallthrough();  // accept the global flags after the subcommand too
        sub->add_option("input", input, "molecule file (edge list or SMILES), - for stdin")
            ->required();
    };
    auto add_cost_flags = [&](CLI::App* sub) {
        sub->add_option("--cost", cost, "cost kind")
            ->check(CLI::IsMember({"additive", "retro-yield"}))
            ->capture_default_str();
        sub->add_option("--affix-cost", affix, "additive cost per affixation")
            ->capture_default_str();
        sub->add_option("--cycl-cost", cycl, "additive cost per cyclization")
            ->capture_default_str();
        sub->add_option("--r", r, "retro-yield factor, rational > 1")->capture_default_str();
        sub->add_option("--seed-weight", seed_weight, "seed value: heavy-atom count or 1")
            ->check(CLI::IsMember({"atoms", "one"}))
            ->capture_default_str();
    };

    CLI::App* c_expand = app.add_subcommand("expand", "expand the disassembly hypergraph");
    add_input(c_expand);
    c_expand->add_flag("--cyclization-only", cyclization_only,
                       "restrict to ring-opening steps (vertex-split rule)");

    CLI::App* c_index = app.add_subcommand("index", "compute the assembly index");
    add_input(c_index);
    c_index->add_flag("--emit-lp", emit_lp, "also write the integer program as LP text");

    CLI::App* c_wit = app.add_subcommand("witnesses", "enumerate optimal witnesses");
    add_input(c_wit);
    c_wit->add_option("--limit", limit, "maximum number of witnesses")->capture_default_str();

    CLI::App* c_dp = app.add_subcommand("dp", "dynamic-programming cost table");
    add_input(c_dp);
    add_cost_flags(c_dp);

    CLI::App* c_cmp = app.add_subcommand("compare", "index optimum vs DP optimum side by side");
    add_input(c_cmp);
    add_cost_flags(c_cmp);

    CLI::App* c_gram = app.add_subcommand("grammar", "straight-line grammar of an optimal witness");
    add_input(c_gram);

    CLI::App* c_val = app.add_subcommand("validate", "check a witness file against a hypergraph");
    c_val->fallthrough();
    c_val->add_option("hypergraph", input, "hypergraph JSON file")->required();
    c_val->add_option("witness", witness_path, "witness JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    cfg.input = input;
    try {
        if (app.got_subcommand(c_expand)) return cmd_expand(cfg, cyclization_only);
        if (app.got_subcommand(c_index)) return cmd_index(cfg, emit_lp);
        if (app.got_subcommand(c_wit)) return cmd_witnesses(cfg, limit);
        if (app.got_subcommand(c_dp))
            return cmd_dp(cfg, cost_model(cost, affix, cycl, r, seed_weight));
        if (app.got_subcommand(c_cmp))
            return cmd_compare(cfg, cost_model(cost, affix, cycl, r, seed_weight));
        if (app.got_subcommand(c_gram)) return cmd_grammar(cfg);
        if (app.got_subcommand(c_val)) return cmd_validate(input, witness_path);
    } catch (const UnreachableError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    } catch (const ResourceLimitError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const InvalidInputError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
