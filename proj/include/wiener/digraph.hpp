// Digraphs on up to 64 vertices as out-adjacency bit rows.  Directed
// distances use the unreachable-is-zero convention throughout, so every
// quantity is defined for arbitrary digraphs.
#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>

#include "graph.hpp"

namespace wiener {

struct Digraph {
    int n = 0;
    std::array<uint64_t, kMaxVertices> out{};

    static auto empty(int n) -> Digraph {
        if (n < 0 || n > kMaxVertices) throw std::invalid_argument("vertex count out of range");
        Digraph d;
        d.n = n;
        return d;
    }

    auto has_arc(int u, int v) const -> bool { return out[u] >> v & 1; }

    void add_arc(int u, int v) {
        if (u == v) throw std::invalid_argument("self-loops not supported");
        if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex out of range");
        out[u] |= uint64_t{1} << v;
    }

    void remove_arc(int u, int v) { out[u] &= ~(uint64_t{1} << v); }

    auto out_degree(int v) const -> int { return std::popcount(out[v]); }

    auto in_degree(int v) const -> int {
        int deg = 0;
        for (int u = 0; u < n; ++u) deg += has_arc(u, v);
        return deg;
    }

    auto arc_count() const -> long long {
        long long m = 0;
        for (int v = 0; v < n; ++v) m += out_degree(v);
        return m;
    }

    auto operator==(const Digraph& o) const -> bool {
        if (n != o.n) return false;
        for (int v = 0; v < n; ++v)
            if (out[v] != o.out[v]) return false;
        return true;
    }
};

// BFS over out-arcs; dist must hold n bytes, unreachable entries get 0xff.
inline void digraph_distances(const Digraph& d, int src, uint8_t* dist) {
    for (int v = 0; v < d.n; ++v) dist[v] = kUnreachable;
    dist[src] = 0;
    uint64_t frontier = uint64_t{1} << src;
    uint64_t seen = frontier;
    for (uint8_t level = 1; frontier != 0; ++level) {
        uint64_t next = 0;
        while (frontier != 0) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= d.out[v] & ~seen;
        }
        seen |= next;
        for (uint64_t f = next; f != 0; f &= f - 1) dist[std::countr_zero(f)] = level;
        frontier = next;
    }
}

// Row sum w(u) = sum of finite directed distances from u.
inline auto digraph_row_wiener(const Digraph& d, int u) -> long long {
    uint8_t dist[kMaxVertices];
    digraph_distances(d, u, dist);
    long long w = 0;
    for (int v = 0; v < d.n; ++v)
        if (v != u && dist[v] != kUnreachable) w += dist[v];
    return w;
}

inline auto digraph_wiener(const Digraph& d) -> long long {
    long long w = 0;
    for (int u = 0; u < d.n; ++u) w += digraph_row_wiener(d, u);
    return w;
}

inline auto wiener_increment(const Digraph& d, int u) -> long long {
    return digraph_row_wiener(d, u) - d.out_degree(u);
}

inline auto total_increment(const Digraph& d) -> long long {
    long long t = 0;
    for (int u = 0; u < d.n; ++u) t += wiener_increment(d, u);
    return t;
}

// Per-row transitive closure including the vertex itself.
inline auto reachability_closure(const Digraph& d) -> std::array<uint64_t, kMaxVertices> {
    std::array<uint64_t, kMaxVertices> reach{};
    for (int src = 0; src < d.n; ++src) {
        uint64_t seen = uint64_t{1} << src;
        uint64_t frontier = seen;
        while (frontier != 0) {
            uint64_t next = 0;
            while (frontier != 0) {
                int v = std::countr_zero(frontier);
                frontier &= frontier - 1;
                next |= d.out[v] & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        reach[src] = seen;
    }
    return reach;
}

enum class TauConvention { self, noself };

// tau(D) = sum over x of the number of vertices reachable from x; the
// convention flag selects whether the trivial path x to x counts.
inline auto tau(const Digraph& d, TauConvention conv = TauConvention::self) -> long long {
    auto reach = reachability_closure(d);
    long long t = 0;
    for (int v = 0; v < d.n; ++v) t += std::popcount(reach[v]);
    if (conv == TauConvention::noself) t -= d.n;
    return t;
}

inline auto is_strongly_connected(const Digraph& d) -> bool {
    if (d.n <= 1) return true;
    uint64_t all = vertex_mask(d.n);
    auto reach = reachability_closure(d);
    for (int v = 0; v < d.n; ++v)
        if (reach[v] != all) return false;
    return true;
}

inline auto is_acyclic(const Digraph& d) -> bool {
    // peel sinks repeatedly
    uint64_t alive = vertex_mask(d.n);
    bool progress = true;
    while (alive != 0 && progress) {
        progress = false;
        for (uint64_t m = alive; m != 0; m &= m - 1) {
            int v = std::countr_zero(m);
            if ((d.out[v] & alive) == 0) {
                alive &= ~(uint64_t{1} << v);
                progress = true;
            }
        }
    }
    return alive == 0;
}

inline auto converse(const Digraph& d) -> Digraph {
    Digraph c = Digraph::empty(d.n);
    for (int u = 0; u < d.n; ++u)
        for (uint64_t m = d.out[u]; m != 0; m &= m - 1) c.add_arc(std::countr_zero(m), u);
    return c;
}

inline auto underlying_graph(const Digraph& d) -> Graph {
    Graph g = Graph::empty(d.n);
    for (int u = 0; u < d.n; ++u)
        for (uint64_t m = d.out[u]; m != 0; m &= m - 1) g.add_edge(u, std::countr_zero(m));
    return g;
}

inline auto has_antiparallel_pair(const Digraph& d) -> bool {
    for (int u = 0; u < d.n; ++u)
        for (uint64_t m = d.out[u]; m != 0; m &= m - 1)
            if (d.has_arc(std::countr_zero(m), u)) return true;
    return false;
}

// A vertex v of an oriented tree is core when every vertex u admits a
// directed path u to v or v to u.  Returns the bit set of core vertices.
inline auto core_vertices(const Digraph& d) -> uint64_t {
    if (has_antiparallel_pair(d) || !is_tree(underlying_graph(d)))
        throw std::invalid_argument("core vertices require an oriented tree");
    auto reach = reachability_closure(d);
    uint64_t core = 0;
    for (int v = 0; v < d.n; ++v) {
        bool ok = true;
        for (int u = 0; u < d.n && ok; ++u)
            if (!(reach[u] >> v & 1) && !(reach[v] >> u & 1)) ok = false;
        if (ok) core |= uint64_t{1} << v;
    }
    return core;
}

inline auto is_no_zig_zag(const Digraph& d) -> bool { return core_vertices(d) != 0; }

}  // namespace wiener
