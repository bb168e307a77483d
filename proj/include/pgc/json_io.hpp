#pragma once

#include <json.hpp>

#include "pgc/certificates.hpp"
#include "pgc/classes.hpp"
#include "pgc/graph6.hpp"

namespace pgc {

using nlohmann::json;

inline json set_to_json(VertexSet s) { return json(set_to_vector(s)); }

inline json certificate_to_json(const Certificate& cert) {
    return std::visit(
        [](const auto& c) -> json {
            using T = std::decay_t<decltype(c)>;
            if constexpr (std::is_same_v<T, std::monostate>) {
                return {{"type", "exhausted"}};
            } else if constexpr (std::is_same_v<T, Coloring>) {
                return {{"type", "coloring"}, {"colors", c.color}, {"num_colors", c.num_colors}};
            } else if constexpr (std::is_same_v<T, Bipartition>) {
                return {{"type", "bipartition"},
                        {"left", set_to_json(c.left)},
                        {"right", set_to_json(c.right)}};
            } else if constexpr (std::is_same_v<T, Partition2>) {
                return {{"type", "partition"}, {"a", set_to_json(c.a)}, {"b", set_to_json(c.b)}};
            } else if constexpr (std::is_same_v<T, StableSet>) {
                return {{"type", "stable_set"}, {"vertices", set_to_json(c.vertices)}};
            } else if constexpr (std::is_same_v<T, OddCycle>) {
                return {{"type", "odd_cycle"},
                        {"vertices", c.vertices},
                        {"in_complement", c.in_complement}};
            } else if constexpr (std::is_same_v<T, CliqueWitness>) {
                return {{"type", "clique"}, {"vertices", set_to_json(c.vertices)}};
            } else {
                json j{{"type", "subset"}, {"vertices", set_to_json(c.vertices)}};
                if (c.chi >= 0) j["chi"] = c.chi;
                if (c.omega >= 0) j["omega"] = c.omega;
                return j;
            }
        },
        cert);
}

inline json to_json(const PropertyReport& r) {
    return {{"property", r.property},
            {"holds", r.holds},
            {"certificate", certificate_to_json(r.certificate)},
            {"nodes_searched", r.nodes_searched}};
}

inline json to_json(const ClassVerdict& v) {
    return {{"class", class_name(v.class_id)},
            {"holds", v.holds},
            {"certificate", certificate_to_json(v.certificate)},
            {"nodes_searched", v.nodes_searched}};
}

inline json to_json(const Graph& g, const Classification& c) {
    json classes = json::array();
    for (const auto& v : c.classes) classes.push_back(to_json(v));
    return {{"graph", {{"n", g.n()}, {"graph6", write_graph6(g)}}},
            {"perfect", to_json(c.perfect)},
            {"triangle_free", c.triangle_free},
            {"bipartite", c.bipartite},
            {"chromatic_number", c.chromatic},
            {"clique_number", c.clique},
            {"classes", classes}};
}

}  // namespace pgc
