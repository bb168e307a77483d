#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "pgc/graph.hpp"
#include "pgc/vertexset.hpp"

namespace pgc {

// Machine-checkable witnesses attached to verdicts. All vertex data is
// in the labels of the graph the verdict was computed on; see
// validate.hpp for the independent re-validation routines.

struct Coloring {
    std::vector<int> color;  // per vertex, -1 outside the colored domain
    int num_colors = 0;
};

struct Partition2 {
    VertexSet a = 0;
    VertexSet b = 0;
};

struct StableSet {
    VertexSet vertices = 0;
};

struct OddCycle {
    std::vector<int> vertices;   // cyclic order
    bool in_complement = false;  // witness lives in the complement graph
};

struct CliqueWitness {
    VertexSet vertices = 0;
};

// A vertex subset refuting a universally-quantified class property.
struct ViolatingSubset {
    VertexSet vertices = 0;
    int chi = -1;    // filled where the refutation is a chi/omega gap
    int omega = -1;
};

// std::monostate marks verdicts whose evidence is search exhaustion.
using Certificate = std::variant<std::monostate, Coloring, Bipartition, Partition2,
                                 StableSet, OddCycle, CliqueWitness, ViolatingSubset>;

// Verdict of a single structural property check on one graph.
struct PropertyReport {
    std::string property;
    bool holds = false;
    Certificate certificate;
    std::uint64_t nodes_searched = 0;
};

// Subset with chi > omega, refuting perfection by definition.
struct ImperfectionWitness {
    VertexSet subset = 0;
    int chi = 0;
    int omega = 0;
};

}  // namespace pgc
