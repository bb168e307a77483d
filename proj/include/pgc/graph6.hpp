#pragma once

#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "pgc/errors.hpp"
#include "pgc/graph.hpp"

namespace pgc {

// graph6 interchange format. Only the short (n <= 62) length form is
// needed here since the library caps graphs at 30 vertices. Bits run
// column-major over the upper triangle: (0,1), (0,2), (1,2), (0,3), ...
// which is also the bit order used by canonical_form.

inline std::string write_graph6(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n() + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n(); ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph parse_graph6(std::string_view text) {
    constexpr std::string_view kHeader = ">>graph6<<";
    if (text.substr(0, kHeader.size()) == kHeader) text.remove_prefix(kHeader.size());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.empty()) throw ParseError("graph6: empty input");

    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw ParseError("graph6: multi-byte vertex counts (n > 62) not supported");
    if (first < 63 || first > 126) throw ParseError("graph6: invalid length byte");
    int n = first - 63;
    if (n > Graph::kMaxVertices) throw SizeLimitError("parse_graph6", n, Graph::kMaxVertices);

    int nbits = n * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != 1 + nbytes) {
        if (text.size() < 1 + nbytes) throw ParseError("graph6: truncated edge data");
        throw ParseError("graph6: trailing garbage after edge data");
    }

    Graph g(n);
    int bit = 0;
    for (std::size_t i = 0; i < nbytes; ++i) {
        unsigned char c = static_cast<unsigned char>(text[1 + i]);
        if (c < 63 || c > 126) throw ParseError("graph6: invalid data byte");
        int val = c - 63;
        for (int j = 5; j >= 0; --j, ++bit) {
            if (bit >= nbits) {
                if ((val >> j) & 1) throw ParseError("graph6: nonzero padding bits");
                continue;
            }
            if ((val >> j) & 1) {
                // Recover (u, v) from the column-major bit index.
                int v = 1;
                int b = bit;
                while (b >= v) b -= v, ++v;
                g.add_edge(b, v);
            }
        }
    }
    return g;
}

inline std::vector<Graph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path);
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            graphs.push_back(parse_graph6(line));
        } catch (const ParseError& e) {
            throw ParseError(path + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    return graphs;
}

// Edge-list text format: first line "n m", then m lines "u v", 0-indexed.
inline Graph parse_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    auto fail = [&](const std::string& msg) -> ParseError {
        return ParseError("edge list, line " + std::to_string(lineno) + ": " + msg);
    };

    if (!next_line()) throw ParseError("edge list: empty input");
    int n, m;
    if (std::sscanf(line.c_str(), "%d %d", &n, &m) != 2) throw fail("expected \"n m\"");
    if (n < 0 || n > Graph::kMaxVertices)
        throw SizeLimitError("parse_edge_list", n, Graph::kMaxVertices);
    if (m < 0) throw fail("negative edge count");

    Graph g(n);
    for (int i = 0; i < m; ++i) {
        if (!next_line()) throw fail("expected " + std::to_string(m) + " edges, got " + std::to_string(i));
        int u, v;
        if (std::sscanf(line.c_str(), "%d %d", &u, &v) != 2) throw fail("expected \"u v\"");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw fail(e.what());
        }
    }
    return g;
}

inline Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FileError("cannot open " + path);
    return parse_edge_list(in);
}

}  // namespace pgc
