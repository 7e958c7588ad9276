// Standard graph6 interchange (short form, n <= 62).  Size byte n+63, then
// the upper adjacency triangle column-major, packed big-endian 6 bits per
// printable character, zero-padded.
#pragma once

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace wiener {

inline auto graph6_encode(const Graph& g) -> std::string {
    if (g.n > 62) throw std::invalid_argument("graph6: only the short form (n <= 62) is supported");
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = acc << 1 | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline auto graph6_decode(std::string_view line) -> Graph {
    if (line.empty()) throw std::invalid_argument("graph6: empty line");
    for (char c : line)
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: character out of range 63..126");
    if (line[0] == 126) throw std::invalid_argument("graph6: only the short form (n <= 62) is supported");
    int n = line[0] - 63;
    int pairs = n * (n - 1) / 2;
    size_t body = (pairs + 5) / 6;
    if (line.size() < 1 + body) throw std::invalid_argument("graph6: truncated body");
    if (line.size() > 1 + body) throw std::invalid_argument("graph6: trailing characters");
    Graph g = Graph::empty(n);
    int i = 0, j = 1;
    for (size_t k = 0; k < body; ++k) {
        int v = line[1 + k] - 63;
        for (int b = 5; b >= 0; --b) {
            bool set = v >> b & 1;
            if (j >= n) {
                if (set) throw std::invalid_argument("graph6: nonzero padding bits");
                continue;
            }
            if (set) g.add_edge(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    return g;
}

// Reads whitespace-trimmed graph6 lines, skipping blanks and the optional
// ">>graph6<<" header.
template <typename Visit>
void read_graph6_stream(std::istream& in, Visit&& visit) {
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
            line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            if (line.empty()) continue;
        }
        visit(graph6_decode(line));
    }
}

}  // namespace wiener
