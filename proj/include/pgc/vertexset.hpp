#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace pgc {

// A subset of the vertices 0..n-1 of some graph, kept as a bitmask.
// All graphs in this library have at most 30 vertices, so one 32-bit
// word always suffices.
using VertexSet = std::uint32_t;

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

constexpr VertexSet full_set(int n) {
    return n == 0 ? 0u : (~VertexSet{0} >> (32 - n));
}

constexpr bool contains(VertexSet s, int v) { return (s >> v) & 1u; }

inline int set_size(VertexSet s) { return std::popcount(s); }

// Lowest-numbered vertex of a non-empty set.
inline int lowest_vertex(VertexSet s) { return std::countr_zero(s); }

inline std::vector<int> set_to_vector(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

inline VertexSet set_from_vector(const std::vector<int>& vs) {
    VertexSet s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

// Order on vertex sets by their ascending member lists, element by
// element; a set that is a proper prefix of another compares smaller.
// This is the tie-breaking order used for every witness the library
// reports ({0,3} < {1,2}, {} < {0}, {0} < {0,1}).
inline bool set_lex_less(VertexSet a, VertexSet b) {
    while (a && b) {
        int va = std::countr_zero(a);
        int vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

// Visits every subset of `domain`, smallest lexicographic first (the
// set_lex_less order). The visitor returns false to stop early; the
// function returns false if it was stopped.
template <typename Visitor>
bool for_each_subset_lex(VertexSet domain, Visitor&& visit) {
    struct Frame {
        VertexSet prefix;
        VertexSet rest;  // candidates strictly above the last chosen vertex
    };
    // Explicit stack keeps the preorder walk allocation-light.
    std::vector<Frame> stack;
    stack.push_back({0u, domain});
    while (!stack.empty()) {
        Frame f = stack.back();
        stack.pop_back();
        if (!visit(static_cast<VertexSet>(f.prefix))) return false;
        // Push extensions in reverse so the smallest vertex pops first.
        std::vector<Frame> local;
        VertexSet rest = f.rest;
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            local.push_back({f.prefix | vbit(v), rest});
        }
        for (auto it = local.rbegin(); it != local.rend(); ++it) stack.push_back(*it);
    }
    return true;
}

// Visits every subset of `domain` in (size, lex) order: all singletons
// before all pairs, and within one size in set_lex_less order. Includes
// the empty set first.
template <typename Visitor>
bool for_each_subset_by_size(VertexSet domain, Visitor&& visit) {
    int n_dom = set_size(domain);
    std::vector<int> verts = set_to_vector(domain);
    for (int k = 0; k <= n_dom; ++k) {
        // Combination walk in lex order.
        struct Rec {
            const std::vector<int>& verts;
            int k;
            Visitor& visit;
            bool go(int depth, int from, VertexSet acc) {
                if (depth == k) return visit(acc);
                for (int i = from; i < static_cast<int>(verts.size()); ++i) {
                    if (static_cast<int>(verts.size()) - i < k - depth) break;
                    if (!go(depth + 1, i + 1, acc | vbit(verts[i]))) return false;
                }
                return true;
            }
        } rec{verts, k, visit};
        if (!rec.go(0, 0, 0u)) return false;
    }
    return true;
}

}  // namespace pgc
