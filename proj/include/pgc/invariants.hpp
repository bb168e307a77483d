#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "pgc/certificates.hpp"
#include "pgc/errors.hpp"
#include "pgc/graph.hpp"
#include "pgc/vertexset.hpp"

namespace pgc {

// ---------------------------------------------------------------- cliques

namespace detail {

struct CliqueSearch {
    const Graph& g;
    int best = 0;

    void expand(VertexSet cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        while (cand) {
            if (size + set_size(cand) <= best) return;
            int v = lowest_vertex(cand);
            cand &= cand - 1;
            expand(cand & g.adjacency(v), size + 1);
        }
        best = std::max(best, size);
    }
};

}  // namespace detail

// Exact clique number of G[s] by branch and bound over the candidate
// bitmask. omega(empty) = 0.
inline int clique_number(const Graph& g, VertexSet s) {
    detail::CliqueSearch search{g};
    search.expand(s & g.vertices(), 0);
    return search.best;
}

inline int clique_number(const Graph& g) { return clique_number(g, g.vertices()); }

// Lexicographically least maximum clique of G[s], built greedily: each
// step takes the least vertex that still extends to a maximum clique
// using only higher-numbered candidates.
inline CliqueWitness max_clique(const Graph& g, VertexSet s) {
    s &= g.vertices();
    int need = clique_number(g, s);
    VertexSet clique = 0;
    VertexSet cand = s;
    while (need > 0) {
        VertexSet scan = cand;
        bool advanced = false;
        while (scan) {
            int v = lowest_vertex(scan);
            scan &= scan - 1;
            // Candidates above v that stay adjacent to the whole clique.
            VertexSet rest = cand & g.adjacency(v) & ~(full_set(v) | vbit(v));
            if (1 + clique_number(g, rest) >= need) {
                clique |= vbit(v);
                cand = rest;
                --need;
                advanced = true;
                break;
            }
        }
        if (!advanced) break;  // unreachable: a maximum clique always exists
    }
    return CliqueWitness{clique};
}

// ---------------------------------------------------------------- coloring

// First-fit coloring in ascending vertex order; a cheap deterministic
// upper bound for chi.
inline int greedy_coloring_bound(const Graph& g, VertexSet s) {
    std::vector<VertexSet> classes;
    VertexSet rest = s & g.vertices();
    while (rest) {
        int v = lowest_vertex(rest);
        rest &= rest - 1;
        bool placed = false;
        for (auto& cls : classes) {
            if (!(cls & g.adjacency(v))) {
                cls |= vbit(v);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back(vbit(v));
    }
    return static_cast<int>(classes.size());
}

namespace detail {

// Backtracking k-coloring decision with forward checking. Chooses the
// most constrained vertex next; colors not yet used anywhere on the
// current path are interchangeable, so only the lowest fresh color is
// ever branched on.
struct KColorDecision {
    const Graph& g;
    int k;
    std::array<std::uint32_t, Graph::kMaxVertices> allowed{};
    VertexSet uncolored = 0;

    bool run(VertexSet domain) {
        if (k < 0) return false;
        uncolored = domain;
        if (!uncolored) return true;
        if (set_size(uncolored) <= k) return true;
        if (k == 0) return false;
        std::uint32_t all = (k >= 32) ? ~0u : ((1u << k) - 1);
        for (int v = 0; v < g.n(); ++v) allowed[v] = all;
        return solve(0);
    }

    bool solve(std::uint32_t used_colors) {
        if (!uncolored) return true;
        int v = -1, fewest = std::numeric_limits<int>::max();
        VertexSet scan = uncolored;
        while (scan) {
            int w = lowest_vertex(scan);
            scan &= scan - 1;
            int c = std::popcount(allowed[w]);
            if (c == 0) return false;
            if (c < fewest) {
                fewest = c;
                v = w;
            }
        }
        std::uint32_t fresh = ~used_colors & ((k >= 32) ? ~0u : ((1u << k) - 1));
        std::uint32_t cands = allowed[v] & (used_colors | (fresh & (~fresh + 1)));
        uncolored &= ~vbit(v);
        while (cands) {
            std::uint32_t cbit = cands & (~cands + 1);
            cands &= cands - 1;
            VertexSet touched = 0;
            VertexSet nbrs = g.adjacency(v) & uncolored;
            while (nbrs) {
                int w = lowest_vertex(nbrs);
                nbrs &= nbrs - 1;
                if (allowed[w] & cbit) {
                    allowed[w] &= ~cbit;
                    touched |= vbit(w);
                }
            }
            if (solve(used_colors | cbit)) return true;
            while (touched) {
                int w = lowest_vertex(touched);
                touched &= touched - 1;
                allowed[w] |= cbit;
            }
        }
        uncolored |= vbit(v);
        return false;
    }
};

// First proper coloring in lexicographic order of the color sequence
// (vertices ascending, colors ascending). The least coloring never
// introduces color c before all of 0..c-1 appear, so branching is capped
// at one past the running maximum.
struct LexColoring {
    const Graph& g;
    int k;
    VertexSet domain;
    std::vector<int>& color;

    bool assign(int v, int max_used) {
        while (v < g.n() && !contains(domain, v)) ++v;
        if (v >= g.n()) return true;
        int cap = std::min(k - 1, max_used + 1);
        for (int c = 0; c <= cap; ++c) {
            bool clash = false;
            VertexSet nbrs = g.adjacency(v) & domain & full_set(v);
            while (nbrs) {
                int w = lowest_vertex(nbrs);
                nbrs &= nbrs - 1;
                if (color[w] == c) {
                    clash = true;
                    break;
                }
            }
            if (clash) continue;
            color[v] = c;
            if (assign(v + 1, std::max(max_used, c))) return true;
            color[v] = -1;
        }
        return false;
    }
};

}  // namespace detail

inline bool k_colorable(const Graph& g, VertexSet s, int k) {
    detail::KColorDecision dec{g, k};
    return dec.run(s & g.vertices());
}

// Proper coloring of G[s] with at most k colors, or nullopt. When one
// exists, the returned color sequence is the lexicographically least
// over ascending vertex order.
inline std::optional<Coloring> find_k_coloring(const Graph& g, VertexSet s, int k) {
    s &= g.vertices();
    if (!k_colorable(g, s, k)) return std::nullopt;
    Coloring col;
    col.color.assign(g.n(), -1);
    detail::LexColoring lex{g, k, s, col.color};
    bool ok = lex.assign(0, -1);
    (void)ok;  // decision above guarantees success
    for (int v = 0; v < g.n(); ++v) col.num_colors = std::max(col.num_colors, col.color[v] + 1);
    return col;
}

inline std::optional<Coloring> is_k_colorable(const Graph& g, int k) {
    return find_k_coloring(g, g.vertices(), k);
}

// Exact chromatic number of G[s]: clique lower bound, greedy upper
// bound, then a decision search per k in between. chi(empty) = 0.
inline int chromatic_number(const Graph& g, VertexSet s) {
    s &= g.vertices();
    if (!s) return 0;
    int lb = clique_number(g, s);
    int ub = greedy_coloring_bound(g, s);
    for (int k = lb; k < ub; ++k)
        if (k_colorable(g, s, k)) return k;
    return ub;
}

inline int chromatic_number(const Graph& g) { return chromatic_number(g, g.vertices()); }

// Optimal coloring certificate for G[s] (lexicographically least).
inline Coloring optimal_coloring(const Graph& g, VertexSet s) {
    return *find_k_coloring(g, s, chromatic_number(g, s));
}

// ------------------------------------------------- independent sets

namespace detail {

// Bron-Kerbosch with pivoting on the complement graph: maximal cliques
// of the complement are exactly the maximal independent sets.
template <typename Visitor>
struct MisEnum {
    const Graph& g;
    VertexSet domain;
    Visitor& visit;

    VertexSet nonadj(int v) const { return domain & ~g.adjacency(v) & ~vbit(v); }

    bool rec(VertexSet r, VertexSet p, VertexSet x) {
        if (!p && !x) return visit(r);
        VertexSet px = p | x;
        int pivot = -1, best = -1;
        VertexSet scan = px;
        while (scan) {
            int w = lowest_vertex(scan);
            scan &= scan - 1;
            int c = set_size(p & nonadj(w));
            if (c > best) {
                best = c;
                pivot = w;
            }
        }
        VertexSet ext = p & ~nonadj(pivot);
        while (ext) {
            int v = lowest_vertex(ext);
            ext &= ext - 1;
            if (!rec(r | vbit(v), p & nonadj(v), x & nonadj(v))) return false;
            p &= ~vbit(v);
            x |= vbit(v);
        }
        return true;
    }
};

}  // namespace detail

// Enumerates the maximal independent sets of G[s]; complete and
// duplicate-free. The visitor returns false to stop; so does this
// function if stopped early.
template <typename Visitor>
bool for_each_maximal_independent_set(const Graph& g, VertexSet s, Visitor&& visit) {
    s &= g.vertices();
    detail::MisEnum<Visitor> e{g, s, visit};
    return e.rec(0, s, 0);
}

// Maximal independent sets of G[s] that contain vertex v: these are
// exactly {v} plus a maximal independent set of the non-neighborhood of
// v within s.
template <typename Visitor>
bool for_each_maximal_independent_set_containing(const Graph& g, VertexSet s, int v,
                                                 Visitor&& visit) {
    s &= g.vertices();
    VertexSet sub = s & ~g.adjacency(v) & ~vbit(v);
    detail::MisEnum<Visitor> e{g, sub, visit};
    return e.rec(vbit(v), sub, 0);
}

inline std::vector<VertexSet> maximal_independent_sets(const Graph& g, VertexSet s) {
    std::vector<VertexSet> out;
    for_each_maximal_independent_set(g, s, [&](VertexSet m) {
        out.push_back(m);
        return true;
    });
    return out;
}

// ---------------------------------------------------------- subset cache

// Memoized clique and chromatic numbers over induced subsets of one
// graph. Cached values index directly into dense tables of width 2^n,
// which is why the owner is capped at 24 vertices; every checker that
// uses a cache has a tighter cap of its own. The chromatic recurrence
// removes one maximal independent set through the lowest vertex per
// step, which is also the cross-check oracle for the branch-and-bound
// chromatic_number above. A cache must not be shared across concurrent
// checker runs.
class SubsetCache {
public:
    static constexpr int kMaxTableWidth = 24;

    explicit SubsetCache(const Graph& g) : g_(g) {
        if (g.n() > kMaxTableWidth)
            throw SizeLimitError("SubsetCache", g.n(), kMaxTableWidth);
    }

    const Graph& graph() const { return g_; }

    int omega(VertexSet s) {
        if (omega_tbl_.empty()) omega_tbl_.assign(std::size_t{1} << g_.n(), 0xFF);
        return omega_rec(s & g_.vertices());
    }

    int chi(VertexSet s) {
        if (chi_tbl_.empty()) chi_tbl_.assign(std::size_t{1} << g_.n(), 0xFF);
        return chi_rec(s & g_.vertices());
    }

private:
    int omega_rec(VertexSet s) {
        if (!s) return 0;
        std::uint8_t& slot = omega_tbl_[s];
        if (slot != 0xFF) return slot;
        int v = lowest_vertex(s);
        int without = omega_rec(s & (s - 1));
        int with = 1 + omega_rec(s & g_.adjacency(v));
        return slot = static_cast<std::uint8_t>(std::max(without, with));
    }

    int chi_rec(VertexSet s) {
        if (!s) return 0;
        std::uint8_t& slot = chi_tbl_[s];
        if (slot != 0xFF) return slot;
        int v = lowest_vertex(s);
        int floor = omega(s);
        int best = std::numeric_limits<int>::max();
        for_each_maximal_independent_set_containing(g_, s, v, [&](VertexSet mis) {
            best = std::min(best, 1 + chi_rec(s & ~mis));
            return best > floor;  // cannot improve past the clique bound
        });
        slot = static_cast<std::uint8_t>(best);
        return best;
    }

    Graph g_;
    std::vector<std::uint8_t> omega_tbl_;
    std::vector<std::uint8_t> chi_tbl_;
};

}  // namespace pgc
