#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pgc/errors.hpp"
#include "pgc/graph.hpp"
#include "pgc/graph6.hpp"

namespace pgc {

enum class GraphFilter { All, TriangleFree, Connected, TriangleFreeConnected };

inline const char* filter_name(GraphFilter f) {
    switch (f) {
        case GraphFilter::All: return "all";
        case GraphFilter::TriangleFree: return "triangle-free";
        case GraphFilter::Connected: return "connected";
        case GraphFilter::TriangleFreeConnected: return "triangle-free-connected";
    }
    return "?";
}

inline bool filter_triangle_free(GraphFilter f) {
    return f == GraphFilter::TriangleFree || f == GraphFilter::TriangleFreeConnected;
}

inline bool filter_connected(GraphFilter f) {
    return f == GraphFilter::Connected || f == GraphFilter::TriangleFreeConnected;
}

// Builtin orderly generation runs the canonical-minimality test over
// vertex permutations, which is adequate up to 10 vertices; larger
// universes come from external graph6 files.
inline constexpr int kEnumerationCap = 10;

namespace detail {

// Upper-triangle adjacency bits in column-major (graph6) order, packed
// most significant first into a single word: C(10,2) = 45 bits.
inline std::uint64_t identity_code(const Graph& g) {
    std::uint64_t code = 0;
    for (int v = 1; v < g.n(); ++v)
        for (int u = 0; u < v; ++u) code = (code << 1) | (g.adjacent(u, v) ? 1u : 0u);
    return code;
}

// Branch-and-prune search for the minimum code over all vertex
// permutations. Positions are filled left to right; a prefix that
// exceeds the best (or reference) code is abandoned, and candidates at
// each position are tried in ascending column value so the minimum is
// reached early.
struct MinCodeSearch {
    const Graph& g;
    int n;
    std::array<int, kEnumerationCap> perm{};

    std::uint64_t best_code = 0;
    std::array<int, kEnumerationCap> best_perm{};
    int total_bits = 0;

    // Mode A: full minimization (for canonical_form).
    void minimize() {
        total_bits = n * (n - 1) / 2;
        best_code = identity_code(g);
        for (int v = 0; v < n; ++v) best_perm[v] = v;
        dfs_min(0, 0, 0, 0);
    }

    void dfs_min(int depth, VertexSet used, std::uint64_t code, int bits) {
        if (depth == n) {
            if (code < best_code) {
                best_code = code;
                best_perm = perm;
            }
            return;
        }
        struct Cand {
            std::uint32_t col;
            int v;
        };
        std::array<Cand, kEnumerationCap> cands;
        int ncand = 0;
        for (int v = 0; v < n; ++v) {
            if (contains(used, v)) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = (col << 1) | (g.adjacent(v, perm[i]) ? 1u : 0u);
            cands[ncand++] = {col, v};
        }
        std::sort(cands.begin(), cands.begin() + ncand,
                  [](const Cand& a, const Cand& b) { return a.col < b.col; });
        for (int i = 0; i < ncand; ++i) {
            std::uint64_t next_code = (code << depth) | cands[i].col;
            int next_bits = bits + depth;
            // Compare the prefix against the best code's prefix.
            if (next_bits > 0 && next_code > (best_code >> (total_bits - next_bits))) continue;
            perm[depth] = cands[i].v;
            dfs_min(depth + 1, used | vbit(cands[i].v), next_code, next_bits);
        }
    }

    // Mode B: is the identity labeling already minimum? Any permutation
    // whose prefix drops strictly below the identity prefix settles the
    // answer immediately.
    bool identity_is_min() {
        total_bits = n * (n - 1) / 2;
        best_code = identity_code(g);
        return !dfs_beat(0, 0, 0, 0);
    }

    // Returns true if some permutation beats the identity code.
    bool dfs_beat(int depth, VertexSet used, std::uint64_t code, int bits) {
        if (depth == n) return false;  // full tie
        for (int v = 0; v < n; ++v) {
            if (contains(used, v)) continue;
            std::uint32_t col = 0;
            for (int i = 0; i < depth; ++i)
                col = (col << 1) | (g.adjacent(v, perm[i]) ? 1u : 0u);
            std::uint64_t next_code = (code << depth) | col;
            int next_bits = bits + depth;
            if (next_bits > 0) {
                std::uint64_t ref = best_code >> (total_bits - next_bits);
                if (next_code > ref) continue;
                if (next_code < ref) return true;
            }
            perm[depth] = v;
            if (dfs_beat(depth + 1, used | vbit(v), next_code, next_bits)) return true;
        }
        return false;
    }
};

}  // namespace detail

// Canonical form: the graph6 encoding of the relabeling that minimizes
// the adjacency bit-string over all vertex permutations. Equal byte
// strings exactly characterize isomorphic graphs.
inline std::string canonical_form(const Graph& g) {
    if (g.n() > kEnumerationCap)
        throw SizeLimitError("canonical_form", g.n(), kEnumerationCap);
    detail::MinCodeSearch search{g, g.n()};
    search.minimize();
    Graph canon(g.n());
    for (int i = 0; i < g.n(); ++i)
        for (int j = i + 1; j < g.n(); ++j)
            if (g.adjacent(search.best_perm[i], search.best_perm[j])) canon.add_edge(i, j);
    return write_graph6(canon);
}

namespace detail {

inline bool is_canonically_labeled(const Graph& g) {
    MinCodeSearch search{g, g.n()};
    return search.identity_is_min();
}

// Orderly generation: a canonically labeled graph minus its last vertex
// is canonically labeled (improving the first k columns of the code
// beats any completion), so extending canonical graphs one vertex at a
// time and keeping the canonical extensions yields every isomorphism
// class exactly once. Extensions are tried in ascending column-string
// order, which makes the whole stream ascend in canonical form.
template <typename Visitor>
struct OrderlyGenerator {
    int n;
    GraphFilter filter;
    Visitor& visit;

    bool grow(const Graph& g) {
        if (g.n() == n) {
            if (filter_connected(filter) && !is_connected(g)) return true;
            return visit(g);
        }
        int k = g.n();
        for (std::uint32_t r = 0; r < (1u << k); ++r) {
            // Bit-reverse so column strings ascend.
            VertexSet mask = 0;
            for (int i = 0; i < k; ++i)
                if ((r >> i) & 1) mask |= vbit(k - 1 - i);
            if (filter_triangle_free(filter)) {
                bool makes_triangle = false;
                VertexSet scan = mask;
                while (scan && !makes_triangle) {
                    int v = lowest_vertex(scan);
                    scan &= scan - 1;
                    if (g.adjacency(v) & mask) makes_triangle = true;
                }
                if (makes_triangle) continue;
            }
            Graph h(k + 1);
            for (auto [u, v] : g.edges()) h.add_edge(u, v);
            VertexSet m = mask;
            while (m) {
                int v = lowest_vertex(m);
                m &= m - 1;
                h.add_edge(v, k);
            }
            if (is_canonically_labeled(h) && !grow(h)) return false;
        }
        return true;
    }
};

}  // namespace detail

// Streams one representative per isomorphism class of graphs with
// exactly n vertices satisfying the filter, in ascending canonical
// order. The visitor returns false to stop early.
template <typename Visitor>
bool enumerate_graphs(int n, GraphFilter filter, Visitor&& visit) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
    if (n > kEnumerationCap) throw SizeLimitError("enumerate_graphs", n, kEnumerationCap);
    detail::OrderlyGenerator<Visitor> gen{n, filter, visit};
    return gen.grow(Graph(1));
}

inline std::vector<Graph> enumerate_all(int n, GraphFilter filter) {
    std::vector<Graph> out;
    enumerate_graphs(n, filter, [&](const Graph& g) {
        out.push_back(g);
        return true;
    });
    return out;
}

struct EnumSpec {
    int n = 1;
    GraphFilter filter = GraphFilter::All;
    std::string source_path;  // empty: builtin generation
};

// Builtin generation for spec.n, or file ingestion (one graph6 line per
// graph; the file is trusted to be isomorph-free, the filter is still
// applied).
template <typename Visitor>
bool enumerate(const EnumSpec& spec, Visitor&& visit) {
    if (!spec.source_path.empty()) {
        for (const Graph& g : read_graph6_file(spec.source_path)) {
            if (filter_triangle_free(spec.filter) && !is_triangle_free(g)) continue;
            if (filter_connected(spec.filter) && !is_connected(g)) continue;
            if (!visit(g)) return false;
        }
        return true;
    }
    return enumerate_graphs(spec.n, spec.filter, visit);
}

inline std::uint64_t census_count(int n, GraphFilter filter) {
    std::uint64_t count = 0;
    enumerate_graphs(n, filter, [&](const Graph&) {
        ++count;
        return true;
    });
    return count;
}

// CSV census block: header plus one "n,filter,count" line per size.
inline std::string census_csv(int n_max, GraphFilter filter) {
    std::string out = "n,filter,count\n";
    for (int n = 1; n <= n_max; ++n) {
        out += std::to_string(n);
        out += ',';
        out += filter_name(filter);
        out += ',';
        out += std::to_string(census_count(n, filter));
        out += '\n';
    }
    return out;
}

}  // namespace pgc
