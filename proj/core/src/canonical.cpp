#include <algorithm>
#include <array>
#include <climits>
#include <map>
#include <string>
#include <vector>

#include "asmbly/molgraph.hpp"

namespace asmbly {

namespace {

// Individualization-refinement search for an exact canonical labeling.
// The certificate of a leaf is the full adjacency rendering under that
// labeling; the canonical code is the lexicographic minimum over all leaves.
// Discovered automorphisms prune candidate choices that provably lead to a
// leaf already visited.
class CanonSearch {
public:
    explicit CanonSearch(const LabeledGraph& g) : g_(g), n_(static_cast<int>(g.vertex_count())) {}

    std::string run() {
        if (n_ == 0) return "0:0::";
        Cells cells = initial_partition();
        search(std::move(cells));
        return best_;
    }

private:
    using Cells = std::vector<std::vector<int>>;

    Cells initial_partition() const {
        std::map<std::string, std::vector<int>> by_label;
        for (int v = 0; v < n_; ++v) by_label[g_.label(v)].push_back(v);
        Cells cells;
        cells.reserve(by_label.size());
        for (auto& [label, vs] : by_label) cells.push_back(std::move(vs));
        return cells;
    }

    // Equitable refinement: split cells by the multiset of (neighbor cell, bond).
    void refine(Cells& cells) const {
        std::vector<int> color(n_);
        bool changed = true;
        while (changed) {
            changed = false;
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci)
                for (int v : cells[ci]) color[v] = ci;
            for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
                if (cells[ci].size() <= 1) continue;
                std::map<std::vector<int>, std::vector<int>> groups;
                for (int v : cells[ci]) {
                    std::vector<int> sig;
                    sig.reserve(g_.degree(v));
                    for (auto [w, o] : g_.neighbors(v))
                        sig.push_back(color[w] * 8 + static_cast<int>(o));
                    std::sort(sig.begin(), sig.end());
                    groups[sig].push_back(v);
                }
                if (groups.size() <= 1) continue;
                Cells split;
                split.reserve(cells.size() + groups.size() - 1);
                for (int cj = 0; cj < static_cast<int>(cells.size()); ++cj) {
                    if (cj == ci)
                        for (auto& [sig, vs] : groups) split.push_back(std::move(vs));
                    else
                        split.push_back(std::move(cells[cj]));
                }
                cells = std::move(split);
                changed = true;
                break;
            }
        }
    }

    void leaf_certificate(const Cells& cells, std::string& cert, std::vector<int>& pos) const {
        pos.assign(n_, 0);
        for (int p = 0; p < n_; ++p) pos[cells[p][0]] = p;
        cert = std::to_string(n_) + ":" + std::to_string(g_.edge_count()) + ":";
        for (int p = 0; p < n_; ++p) {
            cert += g_.label(cells[p][0]);
            cert += ',';
        }
        cert += ':';
        std::vector<std::array<int, 3>> es;
        es.reserve(g_.edge_count());
        for (const auto& e : g_.edges()) {
            int a = pos[e.u], b = pos[e.v];
            if (a > b) std::swap(a, b);
            es.push_back({a, b, static_cast<int>(e.order)});
        }
        std::sort(es.begin(), es.end());
        for (const auto& e : es) {
            cert += std::to_string(e[0]);
            cert += '-';
            cert += std::to_string(e[1]);
            cert += '-';
            cert += std::to_string(e[2]);
            cert += ',';
        }
    }

    void record_automorphism(const std::vector<int>& pos) {
        if (autos_.size() >= 64) return;
        std::vector<int> vert_best(n_), vert_here(n_), gamma(n_);
        for (int v = 0; v < n_; ++v) {
            vert_best[best_pos_[v]] = v;
            vert_here[pos[v]] = v;
        }
        for (int p = 0; p < n_; ++p) gamma[vert_best[p]] = vert_here[p];
        autos_.push_back(std::move(gamma));
    }

    bool prunable(int v, const std::vector<int>& tried) const {
        for (const auto& gamma : autos_) {
            bool fixes_base = true;
            for (int b : base_)
                if (gamma[b] != b) {
                    fixes_base = false;
                    break;
                }
            if (!fixes_base) continue;
            for (int u : tried)
                if (gamma[v] == u || gamma[u] == v) return true;
        }
        return false;
    }

    void search(Cells cells) {
        refine(cells);
        int target = -1;
        std::size_t smallest = SIZE_MAX;
        for (int i = 0; i < static_cast<int>(cells.size()); ++i)
            if (cells[i].size() > 1 && cells[i].size() < smallest) {
                smallest = cells[i].size();
                target = i;
            }
        if (target < 0) {
            std::string cert;
            std::vector<int> pos;
            leaf_certificate(cells, cert, pos);
            if (!have_best_ || cert < best_) {
                best_ = std::move(cert);
                best_pos_ = std::move(pos);
                have_best_ = true;
            } else if (cert == best_) {
                record_automorphism(pos);
            }
            return;
        }
        std::vector<int> tried;
        for (int v : cells[target]) {
            if (prunable(v, tried)) continue;
            tried.push_back(v);
            Cells child;
            child.reserve(cells.size() + 1);
            for (int i = 0; i < static_cast<int>(cells.size()); ++i) {
                if (i == target) {
                    child.push_back({v});
                    std::vector<int> rest;
                    rest.reserve(cells[i].size() - 1);
                    for (int w : cells[i])
                        if (w != v) rest.push_back(w);
                    child.push_back(std::move(rest));
                } else {
                    child.push_back(cells[i]);
                }
            }
            base_.push_back(v);
            search(std::move(child));
            base_.pop_back();
        }
    }

    const LabeledGraph& g_;
    int n_;
    std::string best_;
    bool have_best_ = false;
    std::vector<int> best_pos_;
    std::vector<std::vector<int>> autos_;
    std::vector<int> base_;
};

// Backtracking isomorphism matcher used as a second, independent route.
class IsoSearch {
public:
    IsoSearch(const LabeledGraph& a, const LabeledGraph& b) : a_(a), b_(b) {}

    bool run() {
        int n = static_cast<int>(a_.vertex_count());
        map_.assign(n, -1);
        used_.assign(n, false);
        order_ = match_order();
        return extend(0);
    }

private:
    // Vertices of `a` ordered so each one (after the first per component)
    // touches an already-placed vertex; keeps the search tightly constrained.
    std::vector<int> match_order() const {
        int n = static_cast<int>(a_.vertex_count());
        std::vector<int> order;
        std::vector<bool> seen(n, false);
        order.reserve(n);
        for (int s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            order.push_back(s);
            for (std::size_t i = order.size() - 1; i < order.size(); ++i) {
                for (auto [w, o] : a_.neighbors(static_cast<std::uint32_t>(order[i])))
                    if (!seen[w]) {
                        seen[w] = true;
                        order.push_back(static_cast<int>(w));
                    }
            }
        }
        return order;
    }

    bool feasible(int va, int vb) const {
        if (a_.label(va) != b_.label(vb)) return false;
        if (a_.degree(va) != b_.degree(vb)) return false;
        for (auto [w, o] : a_.neighbors(static_cast<std::uint32_t>(va))) {
            int m = map_[w];
            if (m < 0) continue;
            bool found = false;
            for (auto [x, p] : b_.neighbors(static_cast<std::uint32_t>(vb)))
                if (static_cast<int>(x) == m && p == o) {
                    found = true;
                    break;
                }
            if (!found) return false;
        }
        return true;
    }

    bool extend(std::size_t k) {
        if (k == order_.size()) return true;
        int va = order_[k];
        for (int vb = 0; vb < static_cast<int>(b_.vertex_count()); ++vb) {
            if (used_[vb] || !feasible(va, vb)) continue;
            map_[va] = vb;
            used_[vb] = true;
            if (extend(k + 1)) return true;
            map_[va] = -1;
            used_[vb] = false;
        }
        return false;
    }

    const LabeledGraph& a_;
    const LabeledGraph& b_;
    std::vector<int> map_;
    std::vector<bool> used_;
    std::vector<int> order_;
};

}  // namespace

CanonicalCode canonical_form(const LabeledGraph& g) {
    return CanonicalCode{CanonSearch(g).run()};
}

bool is_isomorphic(const LabeledGraph& a, const LabeledGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    auto invariant = [](const LabeledGraph& g) {
        std::vector<std::pair<std::string, std::size_t>> inv;
        inv.reserve(g.vertex_count());
        for (std::uint32_t v = 0; v < g.vertex_count(); ++v) inv.emplace_back(g.label(v), g.degree(v));
        std::sort(inv.begin(), inv.end());
        return inv;
    };
    if (invariant(a) != invariant(b)) return false;
    return IsoSearch(a, b).run();
}

}  // namespace asmbly
