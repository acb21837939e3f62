#include <algorithm>
#include <climits>
#include <deque>
#include <functional>
#include <map>
#include <set>

#include "asmbly/errors.hpp"
#include "asmbly/ilp.hpp"

namespace asmbly {

namespace {

constexpr long long kInf = LLONG_MAX / 4;

/**
 * Per-compound size measure used by the admissible bounds. log_ok: zero-
 * weight edges never raise the measure and weighted edges at most double it,
 * so reaching measure F from best available M needs >= ceil(log2 F/M)
 * weighted edges. class_ok: zero-weight edges preserve the measure exactly,
 * so a measure class with no available member must be entered by a weighted
 * edge. Both flags are verified against every edge, never assumed.
 */
struct Potential {
    std::vector<long long> val;
    bool log_ok = true;
    bool class_ok = true;
};

Potential make_potential(const DirectedHypergraph& h, bool use_edges) {
    Potential p;
    p.val.resize(h.vertex_count());
    for (VertexId v = 0; v < h.vertex_count(); ++v) {
        const auto& g = h.compound(v).graph;
        p.val[v] =
            use_edges ? static_cast<long long>(g.edge_count()) : static_cast<long long>(g.vertex_count());
        if (p.val[v] < 1) p.val[v] = 1;
    }
    for (const auto& e : h.edges()) {
        long long maxt = 0;
        for (VertexId u : e.tail) maxt = std::max(maxt, p.val[u]);
        for (VertexId hv : e.head) {
            if (e.weight == 0) {
                if (p.val[hv] > maxt) p.log_ok = false;
                for (VertexId u : e.tail)
                    if (p.val[u] != p.val[hv]) p.class_ok = false;
            } else if (p.val[hv] > 2 * maxt) {
                p.log_ok = false;
            }
        }
    }
    return p;
}

Witness make_witness(const DirectedHypergraph& h, const IlpModel& m, std::vector<EdgeId> edges,
                     VertexId goal) {
    std::sort(edges.begin(), edges.end());
    Witness w;
    w.selected_edges = std::move(edges);
    std::set<VertexId> verts{goal};
    long long total = 0;
    for (EdgeId e : w.selected_edges) {
        const Hyperedge& he = h.edge(e);
        verts.insert(he.tail.begin(), he.tail.end());
        verts.insert(he.head.begin(), he.head.end());
        total += m.edge_cost(e);
        (he.weight != 0 ? w.affixation_count : w.cyclization_count)++;
    }
    w.selected_vertices.assign(verts.begin(), verts.end());
    w.objective = total;
    w.order = validate_pathway(h, w, goal).order;
    return w;
}

struct Search {
    const IlpModel& m;
    const DirectedHypergraph& h;
    VertexId goal;
    SolveOptions opts;

    bool b_graph = true;
    bool costs_nonneg = true;
    long long min_w1 = 0;                    // cheapest weighted edge, when all costs >= 0
    std::vector<long long> min_prod;         // cheapest producer per vertex (kInf: none)
    std::vector<std::vector<EdgeId>> prods;  // producers by (cost, id)
    std::vector<Potential> pots;
    std::vector<std::pair<long long, VertexId>> branch_key;  // (-atoms, id)

    // dynamic state
    std::vector<char> produced;
    std::vector<int> used;  // selected edges consuming v; for the byproduct rule
    std::vector<char> in_needed;
    std::set<std::pair<long long, VertexId>> needed;
    std::vector<EdgeId> selected;
    long long cur_cost = 0;
    long long sel_edges = 0;
    long long sum_minprod = 0;
    long long dead_count = 0;  // needed vertices with no producer
    long long neg_unsel = 0;   // sum of negative costs over unselected edges
    struct PotState {
        std::multiset<long long> needed_phi, avail_phi;
        std::map<long long, long long> needed_cls, avail_cls;
    };
    std::vector<PotState> pstate;

    bool have_inc = false;
    long long inc_cost = 0;
    std::vector<EdgeId> inc_sel;

    bool enumerating = false;
    long long enum_target = 0;
    std::function<bool(const std::vector<EdgeId>&)> emit;  // false stops the sweep

    std::uint64_t nodes = 0;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit Search(const IlpModel& model)
        : m(model), h(model.hypergraph()), goal(model.goal()), opts() {
        min_prod.assign(h.vertex_count(), kInf);
        prods.resize(h.vertex_count());
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            const Hyperedge& he = h.edge(e);
            if (he.head.size() != 1) b_graph = false;
            long long c = m.edge_cost(e);
            if (c < 0) {
                costs_nonneg = false;
                neg_unsel += c;
            }
        }
        min_w1 = kInf;
        for (EdgeId e = 0; e < h.edge_count(); ++e)
            if (h.edge(e).weight != 0) min_w1 = std::min(min_w1, m.edge_cost(e));
        if (min_w1 == kInf || min_w1 < 0) min_w1 = 0;

        for (VertexId v = 0; v < h.vertex_count(); ++v) {
            prods[v] = h.producers(v);
            std::sort(prods[v].begin(), prods[v].end(), [&](EdgeId a, EdgeId b) {
                return std::make_pair(m.edge_cost(a), a) < std::make_pair(m.edge_cost(b), b);
            });
            for (EdgeId e : prods[v]) min_prod[v] = std::min(min_prod[v], m.edge_cost(e));
        }
        Potential pe = make_potential(h, true);
        Potential pv = make_potential(h, false);
        if (pe.log_ok || pe.class_ok) pots.push_back(std::move(pe));
        if (pv.log_ok || pv.class_ok) pots.push_back(std::move(pv));
        pstate.resize(pots.size());

        branch_key.resize(h.vertex_count());
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            branch_key[v] = {-static_cast<long long>(h.compound(v).graph.vertex_count()), v};

        produced.assign(h.vertex_count(), 0);
        used.assign(h.vertex_count(), 0);
        in_needed.assign(h.vertex_count(), 0);
        for (VertexId v = 0; v < h.vertex_count(); ++v)
            if (h.is_seed(v)) gain_avail(v);
        add_needed(goal);
    }

    bool avail(VertexId v) const { return produced[v] || h.is_seed(v); }

    void gain_avail(VertexId v) {
        for (std::size_t i = 0; i < pots.size(); ++i) {
            pstate[i].avail_phi.insert(pots[i].val[v]);
            pstate[i].avail_cls[pots[i].val[v]]++;
        }
    }
    void lose_avail(VertexId v) {
        for (std::size_t i = 0; i < pots.size(); ++i) {
            pstate[i].avail_phi.erase(pstate[i].avail_phi.find(pots[i].val[v]));
            pstate[i].avail_cls[pots[i].val[v]]--;
        }
    }
    void add_needed(VertexId v) {
        in_needed[v] = 1;
        needed.insert(branch_key[v]);
        if (min_prod[v] == kInf) ++dead_count;
        else sum_minprod += min_prod[v];
        for (std::size_t i = 0; i < pots.size(); ++i) {
            pstate[i].needed_phi.insert(pots[i].val[v]);
            pstate[i].needed_cls[pots[i].val[v]]++;
        }
    }
    void remove_needed(VertexId v) {
        in_needed[v] = 0;
        needed.erase(branch_key[v]);
        if (min_prod[v] == kInf) --dead_count;
        else sum_minprod -= min_prod[v];
        for (std::size_t i = 0; i < pots.size(); ++i) {
            pstate[i].needed_phi.erase(pstate[i].needed_phi.find(pots[i].val[v]));
            pstate[i].needed_cls[pots[i].val[v]]--;
        }
    }

    struct Undo {
        EdgeId e = 0;
        std::vector<VertexId> became_avail;
        std::vector<VertexId> heads_unneeded;
        std::vector<VertexId> tails_needed;
    };

    void select(EdgeId e, Undo& u) {
        u.e = e;
        selected.push_back(e);
        cur_cost += m.edge_cost(e);
        if (m.edge_cost(e) < 0) neg_unsel -= m.edge_cost(e);
        ++sel_edges;
        const Hyperedge& he = h.edge(e);
        for (VertexId hv : he.head) {
            if (!avail(hv)) {
                produced[hv] = 1;
                gain_avail(hv);
                u.became_avail.push_back(hv);
                if (in_needed[hv]) {
                    remove_needed(hv);
                    u.heads_unneeded.push_back(hv);
                }
            } else if (!produced[hv]) {
                produced[hv] = 1;  // seed head: track for the exactly-one rule
                u.became_avail.push_back(hv);
            }
        }
        VertexId last = static_cast<VertexId>(-1);
        for (VertexId t : he.tail) {
            if (t == last) continue;
            last = t;
            ++used[t];
            if (!avail(t) && !in_needed[t]) {
                add_needed(t);
                u.tails_needed.push_back(t);
            }
        }
    }

    void rollback(const Undo& u) {
        VertexId last = static_cast<VertexId>(-1);
        for (VertexId t : h.edge(u.e).tail) {
            if (t == last) continue;
            last = t;
            --used[t];
        }
        for (VertexId t : u.tails_needed) remove_needed(t);
        for (VertexId hv : u.heads_unneeded) add_needed(hv);
        for (VertexId hv : u.became_avail) {
            produced[hv] = 0;
            if (!h.is_seed(hv)) lose_avail(hv);
        }
        --sel_edges;
        if (m.edge_cost(u.e) < 0) neg_unsel += m.edge_cost(u.e);
        cur_cost -= m.edge_cost(u.e);
        selected.pop_back();
    }

    long long lower_bound() const {
        long long lb = cur_cost;
        if (!costs_nonneg) {
            lb += neg_unsel;
        } else {
            long long structural = 0;
            if (b_graph) {
                structural = sum_minprod;
            } else if (!needed.empty()) {
                long long best = 0;
                for (auto [key, v] : needed)
                    if (min_prod[v] != kInf) best = std::max(best, min_prod[v]);
                structural = best;
            }
            if (min_w1 > 0) {
                for (std::size_t i = 0; i < pots.size(); ++i) {
                    const PotState& ps = pstate[i];
                    if (pots[i].class_ok && b_graph) {
                        long long classes = 0;
                        for (auto [cls, cnt] : ps.needed_cls) {
                            if (cnt <= 0) continue;
                            auto it = ps.avail_cls.find(cls);
                            if (it == ps.avail_cls.end() || it->second == 0) ++classes;
                        }
                        structural = std::max(structural, classes * min_w1);
                    }
                    if (pots[i].log_ok && !ps.needed_phi.empty()) {
                        long long f = *ps.needed_phi.rbegin();
                        long long mx = ps.avail_phi.empty() ? 1 : *ps.avail_phi.rbegin();
                        long long k = 0;
                        while ((mx << k) < f) ++k;
                        structural = std::max(structural, k * min_w1);
                    }
                }
            }
            lb += structural;
        }
        return lb;
    }

    void tick() {
        if (++nodes > opts.max_nodes) throw ResourceLimitError("solver node budget exceeded");
        if (opts.wall_budget.count() > 0 && (nodes & 0xFFFu) == 0 &&
            std::chrono::steady_clock::now() - t0 > opts.wall_budget)
            throw ResourceLimitError("solver wall clock budget exceeded");
    }

    // Returns false when the visitor asked to stop the sweep.
    bool dfs() {
        tick();
        if (dead_count > 0) return true;
        long long lb = lower_bound();
        if (enumerating) {
            if (lb > enum_target) return true;
        } else if (have_inc && lb >= inc_cost) {
            return true;
        }
        if (needed.empty()) {
            // plan semantics on multi-head input: byproducts must be consumed
            if (!b_graph && opts.single_producer) {
                for (EdgeId e : selected)
                    for (VertexId hv : h.edge(e).head)
                        if (hv != goal && !h.is_seed(hv) && used[hv] == 0) return true;
            }
            if (enumerating) {
                if (cur_cost == enum_target) return emit(selected);
                return true;
            }
            if (!have_inc || cur_cost < inc_cost) {
                have_inc = true;
                inc_cost = cur_cost;
                inc_sel = selected;
            }
            return true;
        }
        VertexId v = needed.begin()->second;
        for (EdgeId e : prods[v]) {
            if (opts.single_producer) {
                bool clash = false;
                for (VertexId hv : h.edge(e).head)
                    if (produced[hv] && !h.is_seed(hv)) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            }
            Undo u;
            select(e, u);
            bool go_on = dfs();
            rollback(u);
            if (!go_on) return false;
        }
        return true;
    }
};

IlpSolution run_solve(const IlpModel& m, const SolveOptions& opts) {
    const DirectedHypergraph& h = m.hypergraph();
    VertexId goal = m.goal();
    if (h.is_seed(goal)) {
        IlpSolution s;
        s.witness = make_witness(h, m, {}, goal);
        return s;
    }
    Search s(m);
    s.opts = opts;
    // Incumbent seed: any optimal additive plan is a feasible selection.
    CostModel seed_cm;
    seed_cm.affix_cost = 1;
    seed_cm.cycl_cost = 0;
    DpTable table = dp_solve(h, seed_cm);
    if (table.reachable(goal)) {
        Witness plan = extract_plan(h, table, goal);
        long long c = 0;
        bool feasible = true;
        std::vector<int> made(h.vertex_count(), 0), fed(h.vertex_count(), 0);
        for (EdgeId e : plan.selected_edges) {
            c += m.edge_cost(e);
            for (VertexId hv : h.edge(e).head) ++made[hv];
            for (VertexId t : h.edge(e).tail) ++fed[t];
        }
        // the plan may break the plan-semantics byproduct rules on multi-head input
        if (opts.single_producer)
            for (EdgeId e : plan.selected_edges)
                for (VertexId hv : h.edge(e).head) {
                    if (h.is_seed(hv)) continue;
                    if (made[hv] > 1 || (hv != goal && fed[hv] == 0)) feasible = false;
                }
        if (feasible) {
            s.have_inc = true;
            s.inc_cost = c;
            s.inc_sel = plan.selected_edges;
        }
    }
    s.dfs();
    if (!s.have_inc) throw UnreachableError("no feasible selection reaches the goal");
    IlpSolution out;
    out.objective = s.inc_cost;
    out.nodes = s.nodes;
    out.witness = make_witness(h, m, s.inc_sel, goal);
    return out;
}

}  // namespace

IlpSolution solve(const IlpModel& m, const SolveOptions& opts) { return run_solve(m, opts); }

std::uint64_t for_each_optimal_witness(const IlpModel& m,
                                       const std::function<bool(const Witness&)>& visit,
                                       const SolveOptions& opts) {
    IlpSolution base = solve(m, opts);
    const DirectedHypergraph& h = m.hypergraph();
    if (h.is_seed(m.goal())) {
        visit(base.witness);
        return 1;
    }
    Search s(m);
    s.opts = opts;
    s.enumerating = true;
    s.enum_target = base.objective;
    std::uint64_t count = 0;
    s.emit = [&](const std::vector<EdgeId>& sel) {
        ++count;
        return visit(make_witness(h, m, sel, m.goal()));
    };
    s.dfs();
    return count;
}

std::vector<Witness> enumerate_optimal_witnesses(const IlpModel& m, std::size_t limit,
                                                 const SolveOptions& opts) {
    std::vector<Witness> out;
    if (limit == 0) return out;
    for_each_optimal_witness(
        m,
        [&](const Witness& w) {
            out.push_back(w);
            return out.size() < limit;
        },
        opts);
    std::sort(out.begin(), out.end(),
              [](const Witness& a, const Witness& b) { return a.selected_edges < b.selected_edges; });
    return out;
}

AssemblyIndexResult assembly_index_full(const LabeledGraph& target, RuleKind rule,
                                        const ExpansionOptions& eopts, const SolveOptions& sopts) {
    AssemblyIndexResult r;
    r.expansion = expand(target, rule, eopts);
    IlpModel model(r.expansion.h, r.expansion.target, Objective{});
    r.solution = solve(model, sopts);
    r.index = r.solution.witness.affixation_count;
    return r;
}

int assembly_index(const LabeledGraph& target, RuleKind rule) {
    return assembly_index_full(target, rule).index;
}

int brute_force_assembly_index(const LabeledGraph& target, RuleKind rule, int cap) {
    Expansion x = expand(target, rule);
    const DirectedHypergraph& h = x.h;
    if (h.is_seed(x.target)) return 0;

    std::size_t words = (h.vertex_count() + 63) / 64;
    using State = std::vector<std::uint64_t>;
    auto test = [&](const State& s, VertexId v) {
        return (s[v >> 6] >> (v & 63)) & 1u;
    };
    auto set_bit = [](State& s, VertexId v) { s[v >> 6] |= std::uint64_t(1) << (v & 63); };

    State start(words, 0);
    for (VertexId v : h.seed_set()) set_bit(start, v);

    std::map<State, int> dist;
    std::deque<std::pair<State, int>> dq;
    dist[start] = 0;
    dq.push_back({start, 0});
    while (!dq.empty()) {
        auto [st, d] = dq.front();
        dq.pop_front();
        auto it = dist.find(st);
        if (it == dist.end() || it->second != d) continue;  // stale entry
        if (test(st, x.target)) return d;
        for (EdgeId e = 0; e < h.edge_count(); ++e) {
            const Hyperedge& he = h.edge(e);
            bool ready = true;
            for (VertexId t : he.tail)
                if (!test(st, t)) {
                    ready = false;
                    break;
                }
            if (!ready) continue;
            bool news = false;
            for (VertexId hv : he.head)
                if (!test(st, hv)) news = true;
            if (!news) continue;
            int nd = d + (he.weight != 0 ? 1 : 0);
            if (nd > cap) continue;
            State ns = st;
            for (VertexId hv : he.head) set_bit(ns, hv);
            auto known = dist.find(ns);
            if (known != dist.end() && known->second <= nd) continue;
            dist[ns] = nd;
            if (nd == d) dq.push_front({ns, nd});
            else dq.push_back({ns, nd});
        }
        if (dist.size() > 2'000'000) throw ResourceLimitError("oracle state space too large");
    }
    throw ResourceLimitError("no pathway within the affixation cap");
}

int min_affixations_over_optimal_plans(const DirectedHypergraph& h, const DpTable& table,
                                       VertexId goal) {
    DirectedHypergraph sub = best_edge_subhypergraph(h, table);
    IlpModel model(sub, goal, Objective{});
    return solve(model).witness.affixation_count;
}

std::pair<std::size_t, std::size_t> min_edge_comparison(const DirectedHypergraph& h,
                                                        VertexId target) {
    Objective ones;
    ones.mode = ObjectiveMode::Custom;
    ones.custom_costs.assign(h.edge_count(), 1);
    SolveOptions so;
    so.single_producer = false;
    std::size_t direct =
        static_cast<std::size_t>(solve(IlpModel(h, target, ones), so).objective);
    DirectedHypergraph hb = to_b_hypergraph(h);
    Objective ones_b;
    ones_b.mode = ObjectiveMode::Custom;
    ones_b.custom_costs.assign(hb.edge_count(), 1);
    std::size_t split =
        static_cast<std::size_t>(solve(IlpModel(hb, target, ones_b), so).objective);
    return {direct, split};
}

}  // namespace asmbly
