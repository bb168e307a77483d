#pragma once

#include <vector>

#include "pgc/certificates.hpp"
#include "pgc/graph.hpp"

// Independent certificate re-validation. Everything here is written
// against raw adjacency queries only, on purpose: none of the search
// machinery in invariants/perfection/classes is trusted or reused, so a
// bug there cannot validate its own output. The checks are brute force
// and meant for the small graphs certificates are produced on.

namespace pgc::validate {

namespace detail {

// Smallest proper-coloring size by plain backtracking over vertex order.
inline bool colorable(const Graph& g, const std::vector<int>& verts, std::size_t i, int k,
                      std::vector<int>& col) {
    if (i == verts.size()) return true;
    int v = verts[i];
    for (int c = 0; c < k; ++c) {
        bool ok = true;
        for (std::size_t j = 0; j < i; ++j)
            if (g.adjacent(v, verts[j]) && col[j] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        col[i] = c;
        if (colorable(g, verts, i + 1, k, col)) return true;
    }
    return false;
}

inline int brute_chi(const Graph& g, VertexSet s) {
    std::vector<int> verts = set_to_vector(s);
    std::vector<int> col(verts.size());
    for (int k = 0;; ++k) {
        if (colorable(g, verts, 0, k, col)) return k;
    }
}

inline int brute_omega(const Graph& g, VertexSet s) {
    // Grow cliques vertex by vertex.
    int best = 0;
    std::vector<int> verts = set_to_vector(s);
    struct Rec {
        const Graph& g;
        const std::vector<int>& verts;
        int& best;
        void go(std::vector<int>& clique, std::size_t from, int size) {
            best = std::max(best, size);
            for (std::size_t i = from; i < verts.size(); ++i) {
                bool ok = true;
                for (int u : clique)
                    if (!g.adjacent(u, verts[i])) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                clique.push_back(verts[i]);
                go(clique, i + 1, size + 1);
                clique.pop_back();
            }
        }
    } rec{g, verts, best};
    std::vector<int> clique;
    rec.go(clique, 0, 0);
    return best;
}

}  // namespace detail

// chi = omega on every subset of `domain`.
inline bool perfect_brute(const Graph& g, VertexSet domain) {
    std::vector<int> verts = set_to_vector(domain);
    for (VertexSet pick = 0; pick < (VertexSet{1} << verts.size()); ++pick) {
        VertexSet s = 0;
        for (std::size_t i = 0; i < verts.size(); ++i)
            if ((pick >> i) & 1) s |= vbit(verts[i]);
        if (detail::brute_chi(g, s) != detail::brute_omega(g, s)) return false;
    }
    return true;
}

inline bool stable(const Graph& g, VertexSet s) {
    VertexSet scan = s;
    while (scan) {
        int v = lowest_vertex(scan);
        scan &= scan - 1;
        if (g.adjacency(v) & s) return false;
    }
    return true;
}

// Proper coloring of `domain` with fewer than `max_colors` colors.
inline bool coloring(const Graph& g, const Coloring& col, VertexSet domain, int max_colors) {
    if (static_cast<int>(col.color.size()) < g.n()) return false;
    for (int v = 0; v < g.n(); ++v) {
        if (!contains(domain, v)) continue;
        if (col.color[v] < 0 || col.color[v] >= max_colors) return false;
        VertexSet nbrs = g.adjacency(v) & domain;
        while (nbrs) {
            int w = lowest_vertex(nbrs);
            nbrs &= nbrs - 1;
            if (col.color[w] == col.color[v]) return false;
        }
    }
    return true;
}

// Two disjoint covering stable sets.
inline bool bipartition(const Graph& g, const Bipartition& b, VertexSet domain) {
    if (b.left & b.right) return false;
    if ((b.left | b.right) != domain) return false;
    return stable(g, b.left) && stable(g, b.right);
}

// Induced odd cycle of length >= 5; with in_complement set, checked in
// the complement via negated adjacency.
inline bool odd_cycle(const Graph& g, const OddCycle& c) {
    std::size_t len = c.vertices.size();
    if (len < 5 || len % 2 == 0) return false;
    VertexSet seen = 0;
    for (int v : c.vertices) {
        if (v < 0 || v >= g.n() || contains(seen, v)) return false;
        seen |= vbit(v);
    }
    auto adj = [&](int u, int v) { return c.in_complement ? !g.adjacent(u, v) : g.adjacent(u, v); };
    for (std::size_t i = 0; i < len; ++i)
        for (std::size_t j = i + 1; j < len; ++j) {
            bool consecutive = (j == i + 1) || (i == 0 && j == len - 1);
            if (adj(c.vertices[i], c.vertices[j]) != consecutive) return false;
        }
    return true;
}

// Both sides of the partition cover the domain disjointly and induce
// perfect graphs.
inline bool two_perfect_partition(const Graph& g, const Partition2& p, VertexSet domain) {
    if (p.a & p.b) return false;
    if ((p.a | p.b) != domain) return false;
    return perfect_brute(g, p.a) && perfect_brute(g, p.b);
}

// The set is stable and its removal leaves a perfect graph.
inline bool stable_perfect_set(const Graph& g, const StableSet& s, VertexSet domain) {
    if (s.vertices & ~domain) return false;
    return stable(g, s.vertices) && perfect_brute(g, domain & ~s.vertices);
}

inline bool clique(const Graph& g, const CliqueWitness& c) {
    VertexSet scan = c.vertices;
    while (scan) {
        int v = lowest_vertex(scan);
        scan &= scan - 1;
        VertexSet others = c.vertices & ~vbit(v);
        if ((g.adjacency(v) & others) != others) return false;
    }
    return true;
}

// Perfect side / smaller-clique side split for perfect divisibility of
// the whole domain.
inline bool divisible_partition(const Graph& g, const Partition2& p, VertexSet domain) {
    if (p.a & p.b) return false;
    if ((p.a | p.b) != domain) return false;
    return perfect_brute(g, p.a) && detail::brute_omega(g, p.b) < detail::brute_omega(g, domain);
}

// Both sides drop strictly below the domain's clique number.
inline bool two_divisible_partition(const Graph& g, const Partition2& p, VertexSet domain) {
    if (p.a & p.b) return false;
    if ((p.a | p.b) != domain) return false;
    int w = detail::brute_omega(g, domain);
    return detail::brute_omega(g, p.a) < w && detail::brute_omega(g, p.b) < w;
}

// The subset has an edge and admits no split with both clique numbers
// below its own: a genuine refutation of 2-divisibility.
inline bool two_divisible_refutation(const Graph& g, VertexSet h) {
    int w = detail::brute_omega(g, h);
    if (w < 2) return false;
    for (VertexSet a = h;; a = (a - 1) & h) {
        if (detail::brute_omega(g, a) < w && detail::brute_omega(g, h & ~a) < w) return false;
        if (!a) break;
    }
    return true;
}

}  // namespace pgc::validate
