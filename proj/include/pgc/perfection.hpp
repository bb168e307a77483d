#pragma once

#include <array>
#include <optional>
#include <stdexcept>

#include "pgc/certificates.hpp"
#include "pgc/graph.hpp"
#include "pgc/invariants.hpp"

namespace pgc {

namespace detail {

// Exhaustive search for induced odd cycles of one fixed length inside
// `domain`. Paths grow from a root that stays the minimum vertex of the
// cycle; forb_all blocks neighbors of settled interior vertices
// (induced-ness), forb_inner is the same set without the root's
// neighborhood, used when closing the cycle back to the root.
struct OddHoleSearch {
    const Graph& g;
    VertexSet domain;
    int target_len = 0;
    bool find_any = false;

    std::array<int, Graph::kMaxVertices> path{};
    bool found = false;
    VertexSet best = 0;
    std::uint64_t nodes = 0;

    bool run(int root) {
        path[0] = root;
        return extend(1, vbit(root), 0, 0);
    }

    // Returns true to stop the whole search (find_any mode).
    bool extend(int depth, VertexSet pathset, VertexSet forb_all, VertexSet forb_inner) {
        ++nodes;
        int root = path[0];
        int last = path[depth - 1];
        VertexSet above_root = domain & ~full_set(root + 1);
        VertexSet cands;
        if (depth + 1 == target_len) {
            cands = g.adjacency(last) & g.adjacency(root) & above_root & ~pathset & ~forb_inner;
        } else {
            cands = g.adjacency(last) & above_root & ~pathset & ~forb_all;
        }
        VertexSet next_forb_all = forb_all | g.adjacency(last);
        VertexSet next_forb_inner = (last == root) ? forb_inner : (forb_inner | g.adjacency(last));
        while (cands) {
            int u = lowest_vertex(cands);
            cands &= cands - 1;
            path[depth] = u;
            if (depth + 1 == target_len) {
                // Each cycle is met twice (both directions); keep one.
                if (path[1] < u) {
                    VertexSet cyc = pathset | vbit(u);
                    if (!found || set_lex_less(cyc, best)) best = cyc;
                    found = true;
                    if (find_any) return true;
                }
            } else {
                if (extend(depth + 1, pathset | vbit(u), next_forb_all, next_forb_inner))
                    return true;
            }
        }
        return false;
    }
};

struct OddHoleOutcome {
    std::optional<OddCycle> hole;
    std::uint64_t nodes = 0;
};

inline OddHoleOutcome find_odd_hole_impl(const Graph& g, VertexSet domain, bool find_any) {
    OddHoleOutcome out;
    domain &= g.vertices();
    int max_len = set_size(domain);
    for (int len = 5; len <= max_len; len += 2) {
        OddHoleSearch search{g, domain, len, find_any};
        for (int root = 0; root < g.n(); ++root) {
            if (!contains(domain, root)) continue;
            bool stop = search.run(root);
            if (search.found) {
                // The least witness set starts at the least feasible root;
                // higher roots can only produce lex-greater sets.
                (void)stop;
                break;
            }
        }
        out.nodes += search.nodes;
        if (search.found) {
            // Rebuild the cyclic order: start at the minimum vertex and
            // move toward its smaller neighbor inside the cycle.
            VertexSet cyc = search.best;
            OddCycle witness;
            int start = lowest_vertex(cyc);
            VertexSet nbrs = g.adjacency(start) & cyc;
            int cur = lowest_vertex(nbrs);
            int prev = start;
            witness.vertices.push_back(start);
            while (cur != start) {
                witness.vertices.push_back(cur);
                VertexSet step = g.adjacency(cur) & cyc & ~vbit(prev);
                prev = cur;
                cur = lowest_vertex(step);
            }
            out.hole = std::move(witness);
            return out;
        }
    }
    return out;
}

}  // namespace detail

// Shortest induced odd cycle of length >= 5, lexicographically least
// vertex set among the shortest, or nullopt if the graph is
// odd-hole-free. Exhaustive and deliberately exponential.
inline std::optional<OddCycle> find_odd_hole(const Graph& g, VertexSet domain) {
    return detail::find_odd_hole_impl(g, domain, false).hole;
}

inline std::optional<OddCycle> find_odd_hole(const Graph& g) {
    return find_odd_hole(g, g.vertices());
}

inline bool has_odd_hole(const Graph& g, VertexSet domain) {
    return detail::find_odd_hole_impl(g, domain, true).hole.has_value();
}

// Perfection of G[mask] via the strong perfect graph theorem: no odd
// hole and no odd antihole. `gc` must be complement(g); the complement
// of an induced subgraph is the induced subgraph of the complement, so
// one complement per graph serves every mask.
inline bool perfect_in_mask(const Graph& g, const Graph& gc, VertexSet mask) {
    return !has_odd_hole(g, mask) && !has_odd_hole(gc, mask);
}

inline bool is_perfect_by_spgt(const Graph& g) {
    return perfect_in_mask(g, complement(g), g.vertices());
}

// Ground-truth route: chi(G[s]) = omega(G[s]) for every vertex subset.
// Returns the lexicographically least violating subset, or nullopt when
// the graph is perfect. Capped by the 2^n subset sweep.
inline std::optional<ImperfectionWitness> is_perfect_by_definition(const Graph& g,
                                                                   SubsetCache& cache) {
    constexpr int kCap = 16;
    if (g.n() > kCap) throw SizeLimitError("is_perfect_by_definition", g.n(), kCap);
    std::optional<ImperfectionWitness> witness;
    for_each_subset_lex(g.vertices(), [&](VertexSet s) {
        if (!s) return true;
        int chi = cache.chi(s);
        int omega = cache.omega(s);
        if (chi != omega) {
            witness = ImperfectionWitness{s, chi, omega};
            return false;
        }
        return true;
    });
    return witness;
}

// Dense perfection table over all subsets of the cache's graph:
// perfect[s] requires chi = omega on s and on every subset, folded via
// single-vertex deletions.
inline std::vector<char> perfect_table(SubsetCache& cache) {
    const Graph& g = cache.graph();
    std::size_t size = std::size_t{1} << g.n();
    std::vector<char> perfect(size, 1);
    for (VertexSet s = 1; s < size; ++s) {
        if (cache.chi(s) != cache.omega(s)) {
            perfect[s] = 0;
            continue;
        }
        VertexSet scan = s;
        while (scan) {
            int v = lowest_vertex(scan);
            scan &= scan - 1;
            if (!perfect[s & ~vbit(v)]) {
                perfect[s] = 0;
                break;
            }
        }
    }
    return perfect;
}

struct PerfectOptions {
    // Cross-check the verdict against the definition route (n <= 16
    // only); any disagreement is an internal error.
    bool verify_with_definition = false;
};

// Production perfection check with certificates. Triangle-free graphs
// take the bipartiteness fast path; everything else goes through the
// odd-hole / odd-antihole route.
inline PropertyReport is_perfect(const Graph& g, PerfectOptions opts = {}) {
    PropertyReport report;
    report.property = "perfect";

    if (is_triangle_free(g)) {
        auto check = check_bipartite(g, g.vertices());
        if (check.bipartition) {
            report.holds = true;
            report.certificate = *check.bipartition;
        } else {
            report.holds = false;
            auto outcome = detail::find_odd_hole_impl(g, g.vertices(), false);
            report.certificate = *outcome.hole;  // odd cycle exists, shortest one is induced
            report.nodes_searched = outcome.nodes;
        }
    } else {
        auto hole = detail::find_odd_hole_impl(g, g.vertices(), false);
        report.nodes_searched = hole.nodes;
        if (hole.hole) {
            report.holds = false;
            report.certificate = *hole.hole;
        } else {
            auto antihole = detail::find_odd_hole_impl(complement(g), g.vertices(), false);
            report.nodes_searched += antihole.nodes;
            if (antihole.hole) {
                antihole.hole->in_complement = true;
                report.holds = false;
                report.certificate = *antihole.hole;
            } else {
                report.holds = true;  // exhaustion of both searches
            }
        }
    }

    if (opts.verify_with_definition && g.n() <= 16) {
        SubsetCache cache(g);
        bool by_definition = !is_perfect_by_definition(g, cache).has_value();
        if (by_definition != report.holds)
            throw std::logic_error("perfection routes disagree on a graph; this is a bug");
    }
    return report;
}

}  // namespace pgc
