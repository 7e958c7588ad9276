// Graph transformations: line graph, Cartesian product, blowup, join.
// Every result stays inside the 64-vertex cap; violations throw.
#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace wiener {

inline auto line_graph(const Graph& g) -> Graph {
    auto e = g.edges();
    if (e.size() > kMaxVertices)
        throw std::invalid_argument("line graph exceeds 64 vertices");
    Graph l = Graph::empty(static_cast<int>(e.size()));
    for (std::size_t i = 0; i < e.size(); ++i)
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            auto [a, b] = e[i];
            auto [c, d] = e[j];
            if (a == c || a == d || b == c || b == d)
                l.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return l;
}

inline auto iterated_line_graph(const Graph& g, int k) -> Graph {
    Graph h = g;
    for (int i = 0; i < k; ++i) h = line_graph(h);
    return h;
}

// Vertex (u,v) of the product gets index u*|V(h)| + v.
inline auto cartesian_product(const Graph& g, const Graph& h) -> Graph {
    if (g.n * h.n > kMaxVertices)
        throw std::invalid_argument("cartesian product exceeds 64 vertices");
    Graph p = Graph::empty(g.n * h.n);
    auto id = [&](int u, int v) { return u * h.n + v; };
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) {
            for (std::uint64_t m = g.adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
                p.add_edge(id(u, v), id(std::countr_zero(m), v));
            for (std::uint64_t m = h.adj[v] >> (v + 1) << (v + 1); m; m &= m - 1)
                p.add_edge(id(u, v), id(u, std::countr_zero(m)));
        }
    return p;
}

// Replaces vertex v by an independent set of sizes[v] vertices; copies of
// adjacent originals are completely joined.  Class of vertex 0 comes first.
inline auto blowup(const Graph& g, const std::vector<int>& sizes) -> Graph {
    if (static_cast<int>(sizes.size()) != g.n)
        throw std::invalid_argument("blowup needs one size per vertex");
    int total = 0;
    std::vector<int> base(g.n);
    for (int v = 0; v < g.n; ++v) {
        if (sizes[v] < 1) throw std::invalid_argument("blowup sizes must be >= 1");
        base[v] = total;
        total += sizes[v];
    }
    if (total > kMaxVertices) throw std::invalid_argument("blowup exceeds 64 vertices");
    Graph b = Graph::empty(total);
    for (int u = 0; u < g.n; ++u)
        for (std::uint64_t m = g.adj[u] >> (u + 1) << (u + 1); m; m &= m - 1) {
            int v = std::countr_zero(m);
            for (int i = 0; i < sizes[u]; ++i)
                for (int j = 0; j < sizes[v]; ++j) b.add_edge(base[u] + i, base[v] + j);
        }
    return b;
}

// Disjoint union with all cross edges; g's vertices keep their indices.
inline auto join(const Graph& g, const Graph& h) -> Graph {
    if (g.n + h.n > kMaxVertices) throw std::invalid_argument("join exceeds 64 vertices");
    Graph j = Graph::empty(g.n + h.n);
    for (int u = 0; u < g.n; ++u) j.adj[u] = g.adj[u];
    for (int v = 0; v < h.n; ++v) j.adj[g.n + v] = h.adj[v] << g.n;
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) j.add_edge(u, g.n + v);
    return j;
}

}  // namespace wiener
