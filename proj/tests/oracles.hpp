#pragma once

// Independent brute-force oracles used to pin expected values. Nothing
// here calls into the search machinery under test: colorings are tried
// as raw assignments, cliques as raw subsets, so these stay valid
// references even if the library's algorithms change.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "pgc/graph.hpp"
#include "pgc/vertexset.hpp"

namespace oracles {

using pgc::Graph;
using pgc::VertexSet;

// Published counts of graphs up to isomorphism (all / triangle-free /
// connected), indexed by vertex count starting at n=0.
inline const std::vector<std::uint64_t> kGraphCounts = {1, 1, 2, 4, 11, 34, 156, 1044, 12346};
inline const std::vector<std::uint64_t> kTriangleFreeCounts = {1, 1, 2, 3, 7, 14, 38, 107, 410};
inline const std::vector<std::uint64_t> kConnectedCounts = {1, 1, 1, 2, 6, 21, 112, 853};

// Chromatic number by trying every assignment of k colors to n
// vertices, k ascending. Exponential; n <= 6 intended.
inline bool proper(const Graph& g, const std::vector<int>& color) {
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

inline bool colorable_all_assignments(const Graph& g, int k) {
    if (g.n() == 0) return true;
    if (k == 0) return false;
    std::vector<int> color(g.n(), 0);
    for (;;) {
        if (proper(g, color)) return true;
        int i = 0;
        while (i < g.n() && ++color[i] == k) color[i++] = 0;
        if (i == g.n()) return false;
    }
}

inline int brute_chromatic_number(const Graph& g) {
    for (int k = 0;; ++k)
        if (colorable_all_assignments(g, k)) return k;
}

// Clique number by testing every subset of s for pairwise adjacency.
inline bool is_clique(const Graph& g, VertexSet s) {
    VertexSet scan = s;
    while (scan) {
        int v = pgc::lowest_vertex(scan);
        scan &= scan - 1;
        VertexSet others = s & ~pgc::vbit(v);
        if ((g.adjacency(v) & others) != others) return false;
    }
    return true;
}

inline int brute_clique_number(const Graph& g, VertexSet s) {
    int best = 0;
    for (VertexSet sub = s;; sub = (sub - 1) & s) {
        if (is_clique(g, sub)) best = std::max(best, pgc::set_size(sub));
        if (!sub) break;
    }
    return best;
}

inline bool is_independent(const Graph& g, VertexSet s) {
    VertexSet scan = s;
    while (scan) {
        int v = pgc::lowest_vertex(scan);
        scan &= scan - 1;
        if (g.adjacency(v) & s) return false;
    }
    return true;
}

// All maximal independent sets of G[s] by scanning every subset.
inline std::set<VertexSet> brute_maximal_independent_sets(const Graph& g, VertexSet s) {
    std::set<VertexSet> out;
    for (VertexSet sub = s;; sub = (sub - 1) & s) {
        if (is_independent(g, sub)) {
            bool maximal = true;
            VertexSet rest = s & ~sub;
            while (rest && maximal) {
                int v = pgc::lowest_vertex(rest);
                rest &= rest - 1;
                if (is_independent(g, sub | pgc::vbit(v))) maximal = false;
            }
            if (maximal) out.insert(sub);
        }
        if (!sub) break;
    }
    return out;
}

// Perfection straight from the definition, brute force on every subset.
inline bool brute_perfect(const Graph& g, VertexSet domain) {
    std::vector<int> verts = pgc::set_to_vector(domain);
    for (std::uint32_t pick = 0; pick < (1u << verts.size()); ++pick) {
        VertexSet s = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if ((pick >> i) & 1) s |= pgc::vbit(verts[i]);
        Graph h = pgc::induced_subgraph(g, s);
        if (brute_chromatic_number(h) != brute_clique_number(h, h.vertices())) return false;
    }
    return true;
}

// Reference graph6 encoder written directly from the published format
// description (short form, column-major upper triangle, 6-bit chunks
// offset by 63). Used to cross-check the library's encoder byte by byte.
inline std::string reference_graph6(const Graph& g) {
    std::string out(1, static_cast<char>(63 + g.n()));
    std::vector<int> bits;
    for (int col = 1; col < g.n(); ++col)
        for (int row = 0; row < col; ++row) bits.push_back(g.adjacent(row, col) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t i = 0; i < bits.size(); i += 6) {
        int value = 0;
        for (int j = 0; j < 6; ++j) value = value * 2 + bits[i + j];
        out.push_back(static_cast<char>(value + 63));
    }
    return out;
}

// Deterministic Erdos-Renyi-ish sampler for property tests.
inline Graph random_graph(std::mt19937& rng, int n, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace oracles
