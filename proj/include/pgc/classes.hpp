#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgc/certificates.hpp"
#include "pgc/graph.hpp"
#include "pgc/invariants.hpp"
#include "pgc/perfection.hpp"

namespace pgc {

enum class ClassId { TwoPerfect, PerfectlyDivisible, Nice, StablePerfect, TwoDivisible };

inline const char* class_name(ClassId id) {
    switch (id) {
        case ClassId::TwoPerfect: return "2-perfect";
        case ClassId::PerfectlyDivisible: return "perfectly-divisible";
        case ClassId::Nice: return "nice";
        case ClassId::StablePerfect: return "stable-perfect";
        case ClassId::TwoDivisible: return "2-divisible";
    }
    return "?";
}

// Auto lets a checker use its triangle-free shortcut; Direct forces the
// search over the raw definition. Verification suites compare the two.
enum class SearchRoute { Auto, Direct };

struct ClassVerdict {
    ClassId class_id;
    bool holds = false;
    // Positive witness for existential classes, ViolatingSubset for
    // failed universal classes, monostate when the evidence is search
    // exhaustion.
    Certificate certificate;
    std::uint64_t nodes_searched = 0;
};

// Size caps per checker, set by the cost profile of each search
// (bipartition trees vs full 2^n subset sweeps).
inline constexpr int kTwoPerfectCap = 24;
inline constexpr int kPerfectlyDivisibleCap = 12;
inline constexpr int kNiceCap = 14;
inline constexpr int kStablePerfectCap = 24;
inline constexpr int kTwoDivisibleCap = 12;

// ----------------------------------------------- certificate constructors

// Splits a coloring with at most four colors into two induced-bipartite
// halves: classes {0,1} against {2,3}.
inline Partition2 pair_color_classes(const Coloring& col) {
    Partition2 p;
    for (int v = 0; v < static_cast<int>(col.color.size()); ++v) {
        if (col.color[v] < 0) continue;
        (col.color[v] <= 1 ? p.a : p.b) |= vbit(v);
    }
    return p;
}

// The third color class of a coloring with at most three colors;
// removing it leaves the first two classes, an induced-bipartite graph.
inline StableSet third_color_class(const Coloring& col) {
    StableSet s;
    for (int v = 0; v < static_cast<int>(col.color.size()); ++v)
        if (col.color[v] == 2) s.vertices |= vbit(v);
    return s;
}

// ----------------------------------------------------------- 2-perfect

namespace detail {

struct TwoPerfectSearch {
    const Graph& g;
    const Graph& gc;
    std::uint64_t nodes = 0;
    std::optional<Partition2> found;

    // Walks candidate sets `a` in set_lex_less order; both the growing
    // side and the set of vertices already committed to the other side
    // stay perfect, which prunes soundly because perfection is
    // hereditary.
    bool rec(VertexSet a, VertexSet out, int next) {
        ++nodes;
        VertexSet b = g.vertices() & ~a;
        if (perfect_in_mask(g, gc, b)) {
            found = Partition2{a, b};
            return true;
        }
        for (int v = next; v < g.n(); ++v) {
            VertexSet grown = a | vbit(v);
            if (perfect_in_mask(g, gc, grown) && rec(grown, out, v + 1)) return true;
            out |= vbit(v);
            if (!perfect_in_mask(g, gc, out)) return false;
        }
        return false;
    }
};

}  // namespace detail

// Does V(G) split into two sets each inducing a perfect graph? The
// certificate is the partition with lexicographically least first side;
// triangle-free graphs reduce to 4-colorability, with the partition
// built by pairing color classes.
inline ClassVerdict is_2perfect(const Graph& g, SearchRoute route = SearchRoute::Auto) {
    if (g.n() > kTwoPerfectCap)
        throw SizeLimitError("is_2perfect", g.n(), kTwoPerfectCap);
    ClassVerdict verdict;
    verdict.class_id = ClassId::TwoPerfect;

    if (route == SearchRoute::Auto && is_triangle_free(g)) {
        auto col = find_k_coloring(g, g.vertices(), 4);
        verdict.holds = col.has_value();
        if (col) verdict.certificate = pair_color_classes(*col);
        return verdict;
    }

    Graph gc = complement(g);
    detail::TwoPerfectSearch search{g, gc, 0, std::nullopt};
    search.rec(0, 0, 0);
    verdict.holds = search.found.has_value();
    verdict.nodes_searched = search.nodes;
    if (search.found) verdict.certificate = *search.found;
    return verdict;
}

// ------------------------------------------------------- stable-perfect

// Is there a stable set (possibly empty) whose removal leaves a perfect
// graph? Stable sets are tried by increasing size, lexicographic within
// a size, so the certificate is the least such set. Triangle-free
// graphs reduce to 3-colorability; the third color class is the witness.
inline ClassVerdict is_stable_perfect(const Graph& g, SearchRoute route = SearchRoute::Auto) {
    if (g.n() > kStablePerfectCap)
        throw SizeLimitError("is_stable_perfect", g.n(), kStablePerfectCap);
    ClassVerdict verdict;
    verdict.class_id = ClassId::StablePerfect;

    if (route == SearchRoute::Auto && is_triangle_free(g)) {
        auto col = find_k_coloring(g, g.vertices(), 3);
        verdict.holds = col.has_value();
        if (col) verdict.certificate = third_color_class(*col);
        return verdict;
    }

    Graph gc = complement(g);
    std::uint64_t nodes = 0;
    std::optional<StableSet> found;

    struct Rec {
        const Graph& g;
        const Graph& gc;
        std::uint64_t& nodes;
        std::optional<StableSet>& found;
        bool go(VertexSet s, int next, int left) {
            if (left == 0) {
                ++nodes;
                if (perfect_in_mask(g, gc, g.vertices() & ~s)) {
                    found = StableSet{s};
                    return true;
                }
                return false;
            }
            for (int v = next; v <= g.n() - left; ++v) {
                if (g.adjacency(v) & s) continue;  // keep s stable
                if (go(s | vbit(v), v + 1, left - 1)) return true;
            }
            return false;
        }
    } rec{g, gc, nodes, found};

    for (int size = 0; size <= g.n() && !found; ++size) rec.go(0, 0, size);

    verdict.holds = found.has_value();
    verdict.nodes_searched = nodes;
    if (found) verdict.certificate = *found;
    return verdict;
}

// ---------------------------------------------------------------- nice

// chi - omega <= 1 on every induced subgraph. Subsets are swept in
// (size, lex) order, so a failure reports a minimal violating subset.
inline ClassVerdict is_nice(const Graph& g, SubsetCache& cache) {
    if (g.n() > kNiceCap) throw SizeLimitError("is_nice", g.n(), kNiceCap);
    ClassVerdict verdict;
    verdict.class_id = ClassId::Nice;
    verdict.holds = true;
    for_each_subset_by_size(g.vertices(), [&](VertexSet s) {
        if (!s) return true;
        ++verdict.nodes_searched;
        int chi = cache.chi(s);
        int omega = cache.omega(s);
        if (chi - omega > 1) {
            verdict.holds = false;
            verdict.certificate = ViolatingSubset{s, chi, omega};
            return false;
        }
        return true;
    });
    return verdict;
}

// ------------------------------------------------- perfectly divisible

// Every induced subgraph H must split into a perfect part and a part of
// strictly smaller clique number than H. Each subset is checked against
// a dense perfection table; failures report the minimal violating
// subset in (size, lex) order.
inline ClassVerdict is_perfectly_divisible(const Graph& g, SubsetCache& cache) {
    if (g.n() > kPerfectlyDivisibleCap)
        throw SizeLimitError("is_perfectly_divisible", g.n(), kPerfectlyDivisibleCap);
    ClassVerdict verdict;
    verdict.class_id = ClassId::PerfectlyDivisible;
    verdict.holds = true;

    std::vector<char> perfect = perfect_table(cache);
    auto splits = [&](VertexSet h) {
        int w = cache.omega(h);
        // Submask walk over candidate perfect sides.
        VertexSet a = h;
        while (true) {
            ++verdict.nodes_searched;
            if (perfect[a] && cache.omega(h & ~a) < w) return true;
            if (!a) break;
            a = (a - 1) & h;
        }
        return false;
    };

    for_each_subset_by_size(g.vertices(), [&](VertexSet h) {
        if (!h) return true;
        if (!splits(h)) {
            verdict.holds = false;
            verdict.certificate = ViolatingSubset{h, -1, cache.omega(h)};
            return false;
        }
        return true;
    });

    if (verdict.holds && g.n() > 0) {
        // Attach the least winning split of the whole vertex set.
        int w = cache.omega(g.vertices());
        for_each_subset_lex(g.vertices(), [&](VertexSet a) {
            if (perfect[a] && cache.omega(g.vertices() & ~a) < w) {
                verdict.certificate = Partition2{a, g.vertices() & ~a};
                return false;
            }
            return true;
        });
    }
    return verdict;
}

// ----------------------------------------------------------- 2-divisible

// Every induced subgraph containing an edge must split into two parts
// whose clique numbers both drop below its own. Subgraphs with no edge
// are exempt: for those the condition is unsatisfiable as written, and
// the class is standardly read over subgraphs with at least one edge.
inline ClassVerdict is_2divisible(const Graph& g, SubsetCache& cache) {
    if (g.n() > kTwoDivisibleCap)
        throw SizeLimitError("is_2divisible", g.n(), kTwoDivisibleCap);
    ClassVerdict verdict;
    verdict.class_id = ClassId::TwoDivisible;
    verdict.holds = true;

    auto splits = [&](VertexSet h, int w) {
        VertexSet a = h;
        while (true) {
            ++verdict.nodes_searched;
            if (cache.omega(a) < w && cache.omega(h & ~a) < w) return true;
            if (!a) break;
            a = (a - 1) & h;
        }
        return false;
    };

    for_each_subset_by_size(g.vertices(), [&](VertexSet h) {
        if (!h) return true;
        int w = cache.omega(h);
        if (w < 2) return true;  // edgeless subgraph
        if (!splits(h, w)) {
            verdict.holds = false;
            verdict.certificate = ViolatingSubset{h, -1, w};
            return false;
        }
        return true;
    });

    if (verdict.holds && cache.omega(g.vertices()) >= 2) {
        int w = cache.omega(g.vertices());
        for_each_subset_lex(g.vertices(), [&](VertexSet a) {
            if (cache.omega(a) < w && cache.omega(g.vertices() & ~a) < w) {
                verdict.certificate = Partition2{a, g.vertices() & ~a};
                return false;
            }
            return true;
        });
    }
    return verdict;
}

// ------------------------------------------------------------ dispatcher

struct Classification {
    PropertyReport perfect;
    bool triangle_free = false;
    bool bipartite = false;
    int chromatic = 0;
    int clique = 0;
    std::vector<ClassVerdict> classes;  // the five classes, fixed order
};

// Runs every checker plus the perfect/triangle-free/bipartite flags and
// asserts the inclusion chain (perfect => stable-perfect => each of
// 2-perfect, perfectly divisible, nice); a violation means a checker
// bug, not a property of the input.
inline Classification classify_all(const Graph& g, SearchRoute route = SearchRoute::Auto) {
    Classification c;
    c.perfect = is_perfect(g);
    c.triangle_free = is_triangle_free(g);
    c.bipartite = is_bipartite(g).has_value();
    c.chromatic = chromatic_number(g);
    c.clique = clique_number(g);

    SubsetCache cache(g);
    c.classes.push_back(is_2perfect(g, route));
    c.classes.push_back(is_perfectly_divisible(g, cache));
    c.classes.push_back(is_nice(g, cache));
    c.classes.push_back(is_stable_perfect(g, route));
    c.classes.push_back(is_2divisible(g, cache));

    bool two_perfect = c.classes[0].holds;
    bool divisible = c.classes[1].holds;
    bool nice = c.classes[2].holds;
    bool stable_perfect = c.classes[3].holds;
    if (c.perfect.holds && !stable_perfect)
        throw std::logic_error("inclusion chain broken: perfect but not stable-perfect");
    if (stable_perfect && !(two_perfect && divisible && nice))
        throw std::logic_error("inclusion chain broken: stable-perfect but missing a superclass");
    return c;
}

}  // namespace pgc
