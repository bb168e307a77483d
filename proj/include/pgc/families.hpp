#pragma once

#include "pgc/graph.hpp"

namespace pgc {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline Graph path_graph(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline Graph cycle_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

inline Graph petersen_graph() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);          // outer 5-cycle
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);                // spokes
    }
    return g;
}

// Mycielski construction: adds one shadow per vertex plus an apex,
// preserving triangle-freeness while raising the chromatic number by one.
// Vertex layout: originals 0..n-1, shadow of v at n+v, apex at 2n.
inline Graph mycielskian(const Graph& g) {
    int n = g.n();
    Graph m(2 * n + 1);
    for (auto [u, v] : g.edges()) {
        m.add_edge(u, v);
        m.add_edge(n + u, v);
        m.add_edge(u, n + v);
    }
    for (int v = 0; v < n; ++v) m.add_edge(n + v, 2 * n);
    return m;
}

// The 11-vertex triangle-free graph with chromatic number 4.
inline Graph grotzsch_graph() { return mycielskian(cycle_graph(5)); }

}  // namespace pgc
