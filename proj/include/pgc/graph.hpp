#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "pgc/errors.hpp"
#include "pgc/vertexset.hpp"

namespace pgc {

// Simple undirected graph on at most kMaxVertices vertices, stored as one
// adjacency bitmask per vertex. Adjacency is kept symmetric and
// irreflexive by construction; instances are plain values and are meant
// to be treated as immutable once built, so they are safe to share
// between threads.
class Graph {
public:
    static constexpr int kMaxVertices = 30;

    Graph() = default;

    explicit Graph(int n) : n_(n) {
        if (n < 0 || n > kMaxVertices)
            throw SizeLimitError("Graph", n, kMaxVertices);
    }

    int n() const { return n_; }

    VertexSet vertices() const { return full_set(n_); }

    VertexSet adjacency(int v) const { return adj_[v]; }

    bool adjacent(int u, int v) const { return contains(adj_[u], v); }

    int degree(int v) const { return set_size(adj_[v]); }

    void add_edge(int u, int v) {
        if (u == v)
            throw SelfLoopError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n_ || v >= n_)
            throw InvalidEdgeError("edge (" + std::to_string(u) + "," +
                                   std::to_string(v) + ") out of range for n=" +
                                   std::to_string(n_));
        adj_[u] |= vbit(v);
        adj_[v] |= vbit(u);
    }

    int edge_count() const {
        int twice = 0;
        for (int v = 0; v < n_; ++v) twice += degree(v);
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int v = 1; v < n_; ++v) {
            VertexSet lower = adj_[v] & full_set(v);
            while (lower) {
                int u = lowest_vertex(lower);
                lower &= lower - 1;
                out.emplace_back(u, v);
            }
        }
        return out;
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        if (a.n_ != b.n_) return false;
        for (int v = 0; v < a.n_; ++v)
            if (a.adj_[v] != b.adj_[v]) return false;
        return true;
    }

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

inline Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

inline Graph complement(const Graph& g) {
    Graph c(g.n());
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (!g.adjacent(u, v)) c.add_edge(u, v);
    return c;
}

// Induced subgraph on `s`, vertices relabeled 0..|s|-1 in ascending order
// of their original labels.
inline Graph induced_subgraph(const Graph& g, VertexSet s) {
    std::vector<int> verts = set_to_vector(s & g.vertices());
    Graph h(static_cast<int>(verts.size()));
    for (int i = 0; i < static_cast<int>(verts.size()); ++i)
        for (int j = i + 1; j < static_cast<int>(verts.size()); ++j)
            if (g.adjacent(verts[i], verts[j])) h.add_edge(i, j);
    return h;
}

// The relabeling map used by induced_subgraph: element i is the original
// label of the subgraph's vertex i. Certificates computed on a subgraph
// are composed with this to report original labels.
inline std::vector<int> induced_labels(const Graph& g, VertexSet s) {
    return set_to_vector(s & g.vertices());
}

inline bool is_triangle_free(const Graph& g) {
    for (int v = 1; v < g.n(); ++v) {
        VertexSet lower = g.adjacency(v) & full_set(v);
        while (lower) {
            int u = lowest_vertex(lower);
            lower &= lower - 1;
            if (g.adjacency(u) & g.adjacency(v)) return false;
        }
    }
    return true;
}

struct Bipartition {
    VertexSet left = 0;
    VertexSet right = 0;
};

// Outcome of the two-coloring sweep: either a bipartition or an odd
// cycle (simple, but not necessarily induced) certifying failure.
struct BipartiteCheck {
    std::optional<Bipartition> bipartition;
    std::vector<int> odd_cycle;
};

// BFS two-coloring restricted to `domain`. On failure the returned odd
// cycle is built from the two tree paths to the endpoints of the
// offending edge, trimmed at their lowest common ancestor.
inline BipartiteCheck check_bipartite(const Graph& g, VertexSet domain) {
    std::array<int, Graph::kMaxVertices> color{};
    std::array<int, Graph::kMaxVertices> parent{};
    std::array<int, Graph::kMaxVertices> depth{};
    color.fill(-1);
    parent.fill(-1);

    VertexSet left = 0, right = 0;
    std::vector<int> queue;
    for (int root = 0; root < g.n(); ++root) {
        if (!contains(domain, root) || color[root] != -1) continue;
        color[root] = 0;
        depth[root] = 0;
        queue.assign(1, root);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            VertexSet nbrs = g.adjacency(u) & domain;
            while (nbrs) {
                int v = lowest_vertex(nbrs);
                nbrs &= nbrs - 1;
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    parent[v] = u;
                    depth[v] = depth[u] + 1;
                    queue.push_back(v);
                } else if (color[v] == color[u]) {
                    // Odd cycle: walk both endpoints up to their LCA.
                    std::vector<int> pu{u}, pv{v};
                    int a = u, b = v;
                    while (depth[a] > depth[b]) pu.push_back(a = parent[a]);
                    while (depth[b] > depth[a]) pv.push_back(b = parent[b]);
                    while (a != b) {
                        pu.push_back(a = parent[a]);
                        pv.push_back(b = parent[b]);
                    }
                    // pu ends at LCA, pv stops one short of it.
                    pv.pop_back();
                    std::vector<int> cycle(pu);
                    for (auto it = pv.rbegin(); it != pv.rend(); ++it) cycle.push_back(*it);
                    return {std::nullopt, cycle};
                }
            }
        }
    }
    for (int v = 0; v < g.n(); ++v) {
        if (!contains(domain, v)) continue;
        (color[v] == 0 ? left : right) |= vbit(v);
    }
    return {Bipartition{left, right}, {}};
}

inline std::optional<Bipartition> is_bipartite(const Graph& g) {
    return check_bipartite(g, g.vertices()).bipartition;
}

inline bool is_connected(const Graph& g, VertexSet domain) {
    if (domain == 0) return true;
    VertexSet seen = vbit(lowest_vertex(domain));
    VertexSet frontier = seen;
    while (frontier) {
        int v = lowest_vertex(frontier);
        frontier &= frontier - 1;
        VertexSet fresh = (g.adjacency(v) & domain) & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == domain;
}

inline bool is_connected(const Graph& g) { return is_connected(g, g.vertices()); }

}  // namespace pgc
