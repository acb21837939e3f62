#ifndef ASMBLY_BENCH_COMMON_HPP
#define ASMBLY_BENCH_COMMON_HPP

#include <random>

#include <asmbly/molgraph.hpp>

namespace asmbly::bench {

inline LabeledGraph path_graph(int n) {
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("C");
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1, Bond::Single);
    return g;
}

inline LabeledGraph cycle_graph(int n) {
    LabeledGraph g = path_graph(n);
    g.add_edge(n - 1, 0, Bond::Single);
    return g;
}

inline LabeledGraph cubane_graph() {
    LabeledGraph g;
    for (int i = 0; i < 8; ++i) g.add_vertex("C");
    const int edges[12][2] = {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6},
                              {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}};
    for (const auto& e : edges) g.add_edge(e[0], e[1], Bond::Single);
    return g;
}

/** Spanning tree plus extra random edges; deterministic in the seed. */
inline LabeledGraph random_graph(unsigned seed, int n, int extra) {
    std::mt19937 rng(seed);
    LabeledGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i % 3 ? "C" : "N");
    for (int i = 1; i < n; ++i)
        g.add_edge(int(rng() % unsigned(i)), i, Bond::Single);
    for (int k = 0; k < extra; ++k) {
        int a = int(rng() % unsigned(n));
        int b = int(rng() % unsigned(n));
        if (a != b && !g.has_edge(a, b)) g.add_edge(a, b, Bond::Single);
    }
    return g;
}

}  // namespace asmbly::bench

#endif
