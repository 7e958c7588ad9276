// Undirected simple graphs on up to 64 vertices, adjacency kept as one
// 64-bit row per vertex.  Distances come from bitmask BFS; everything else
// in this header is a small pure function on top of that.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace wiener {

constexpr int kMaxVertices = 64;
constexpr std::uint8_t kUnreachable = 0xff;

struct Graph {
    int n = 0;
    std::array<std::uint64_t, kMaxVertices> adj{};

    static auto empty(int n) -> Graph {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count out of range [0,64]: " + std::to_string(n));
        Graph g;
        g.n = n;
        return g;
    }

    auto has_edge(int u, int v) const -> bool { return (adj[u] >> v) & 1u; }

    void add_edge(int u, int v) {
        if (u == v) throw std::invalid_argument("loop edge rejected");
        adj[u] |= std::uint64_t{1} << v;
        adj[v] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        adj[u] &= ~(std::uint64_t{1} << v);
        adj[v] &= ~(std::uint64_t{1} << u);
    }

    auto degree(int v) const -> int { return std::popcount(adj[v]); }

    auto edge_count() const -> int {
        int s = 0;
        for (int v = 0; v < n; ++v) s += degree(v);
        return s / 2;
    }

    auto max_degree() const -> int {
        int d = 0;
        for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
        return d;
    }

    auto min_degree() const -> int {
        if (n == 0) return 0;
        int d = kMaxVertices;
        for (int v = 0; v < n; ++v) d = std::min(d, degree(v));
        return d;
    }

    // Edges in lexicographic (u,v), u < v order; this order is the contract
    // for orientation direction vectors and signature sign vectors.
    auto edges() const -> std::vector<std::pair<int, int>> {
        std::vector<std::pair<int, int>> e;
        for (int u = 0; u < n; ++u)
            for (std::uint64_t m = adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
                e.emplace_back(u, std::countr_zero(m));
        return e;
    }

    auto operator==(const Graph& o) const -> bool {
        if (n != o.n) return false;
        for (int v = 0; v < n; ++v)
            if (adj[v] != o.adj[v]) return false;
        return true;
    }
};

inline auto vertex_mask(int n) -> std::uint64_t {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// Vertices reachable from the set `seed` (which is included in the result).
inline auto reachable_set(const Graph& g, std::uint64_t seed) -> std::uint64_t {
    std::uint64_t seen = seed, frontier = seed;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= frontier;
    }
    return seen;
}

inline auto is_connected(const Graph& g) -> bool {
    if (g.n <= 1) return true;
    return reachable_set(g, 1) == vertex_mask(g.n);
}

inline auto component_count(const Graph& g) -> int {
    std::uint64_t left = vertex_mask(g.n);
    int c = 0;
    while (left) {
        std::uint64_t seed = left & (~left + 1);
        left &= ~reachable_set(g, seed);
        ++c;
    }
    return c;
}

// Single-source distances; unreachable vertices get kUnreachable.
inline void bfs_distances(const Graph& g, int src, std::uint8_t* dist) {
    for (int v = 0; v < g.n; ++v) dist[v] = kUnreachable;
    std::uint64_t seen = std::uint64_t{1} << src, frontier = seen;
    std::uint8_t d = 0;
    dist[src] = 0;
    while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
        frontier = next & ~seen;
        seen |= frontier;
        ++d;
        for (std::uint64_t m = frontier; m; m &= m - 1) dist[std::countr_zero(m)] = d;
    }
}

struct DistanceMatrix {
    int n = 0;
    std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> d{};

    auto operator()(int u, int v) const -> int { return d[u][v]; }
};

inline auto distance_matrix(const Graph& g) -> DistanceMatrix {
    DistanceMatrix m;
    m.n = g.n;
    for (int v = 0; v < g.n; ++v) bfs_distances(g, v, m.d[v].data());
    return m;
}

using TransmissionVector = std::vector<std::int64_t>;

inline auto transmissions(const Graph& g) -> TransmissionVector {
    TransmissionVector t(g.n, 0);
    std::uint8_t dist[kMaxVertices];
    for (int v = 0; v < g.n; ++v) {
        bfs_distances(g, v, dist);
        std::int64_t s = 0;
        for (int u = 0; u < g.n; ++u) {
            if (dist[u] == kUnreachable)
                throw std::domain_error("wiener undefined on disconnected graph");
            s += dist[u];
        }
        t[v] = s;
    }
    return t;
}

inline auto wiener_index(const Graph& g) -> std::int64_t {
    if (!is_connected(g)) throw std::domain_error("wiener undefined on disconnected graph");
    std::int64_t total = 0;
    std::uint8_t dist[kMaxVertices];
    for (int v = 0; v < g.n; ++v) {
        bfs_distances(g, v, dist);
        for (int u = 0; u < g.n; ++u) total += dist[u];
    }
    return total / 2;
}

inline auto wiener_dimension(const Graph& g) -> int {
    auto t = transmissions(g);
    std::sort(t.begin(), t.end());
    return static_cast<int>(std::unique(t.begin(), t.end()) - t.begin());
}

struct EccentricityProfile {
    std::vector<int> ecc;
    int radius = 0;
    int diameter = 0;
};

inline auto eccentricity_profile(const Graph& g) -> EccentricityProfile {
    if (!is_connected(g)) throw std::domain_error("eccentricity undefined on disconnected graph");
    EccentricityProfile p;
    p.ecc.resize(g.n, 0);
    p.radius = g.n == 0 ? 0 : kMaxVertices;
    std::uint8_t dist[kMaxVertices];
    for (int v = 0; v < g.n; ++v) {
        bfs_distances(g, v, dist);
        int e = 0;
        for (int u = 0; u < g.n; ++u) e = std::max(e, int(dist[u]));
        p.ecc[v] = e;
        p.radius = std::min(p.radius, e);
        p.diameter = std::max(p.diameter, e);
    }
    if (g.n == 0) p.radius = 0;
    return p;
}

// Keeps the relative order of the surviving vertices.
inline auto delete_vertices(const Graph& g, std::uint64_t drop) -> Graph {
    int map[kMaxVertices];
    int k = 0;
    for (int v = 0; v < g.n; ++v) map[v] = (drop >> v) & 1u ? -1 : k++;
    Graph h = Graph::empty(k);
    for (int u = 0; u < g.n; ++u) {
        if (map[u] < 0) continue;
        for (std::uint64_t m = g.adj[u] & ~drop; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (u < v) h.add_edge(map[u], map[v]);
        }
    }
    return h;
}

inline auto delete_vertex(const Graph& g, int v) -> Graph {
    return delete_vertices(g, std::uint64_t{1} << v);
}

// Relabels with perm: vertex v of g becomes perm[v] of the result.
inline auto permute(const Graph& g, const int* perm) -> Graph {
    Graph h = Graph::empty(g.n);
    for (int u = 0; u < g.n; ++u)
        for (std::uint64_t m = g.adj[u] >> (u + 1) << (u + 1); m; m &= m - 1)
            h.add_edge(perm[u], perm[std::countr_zero(m)]);
    return h;
}

inline auto is_tree(const Graph& g) -> bool {
    return g.n >= 1 && g.edge_count() == g.n - 1 && is_connected(g);
}

inline auto is_bipartite(const Graph& g) -> bool {
    std::int8_t side[kMaxVertices];
    for (int v = 0; v < g.n; ++v) side[v] = -1;
    for (int s = 0; s < g.n; ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::uint64_t frontier = std::uint64_t{1} << s;
        int cur = 0;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) next |= g.adj[std::countr_zero(m)];
            frontier = 0;
            for (std::uint64_t m = next; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (side[v] == std::int8_t(cur)) return false;
                if (side[v] < 0) {
                    side[v] = std::int8_t(1 - cur);
                    frontier |= std::uint64_t{1} << v;
                }
            }
            cur = 1 - cur;
        }
    }
    return true;
}

// Length of a shortest cycle, or 0 for forests.
inline auto girth(const Graph& g) -> int {
    int best = 0;
    for (int r = 0; r < g.n; ++r) {
        std::uint8_t dist[kMaxVertices];
        int parent[kMaxVertices];
        for (int v = 0; v < g.n; ++v) dist[v] = kUnreachable, parent[v] = -1;
        dist[r] = 0;
        std::vector<int> queue{r};
        for (std::size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (std::uint64_t m = g.adj[u]; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (dist[v] == kUnreachable) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push_back(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (best == 0 || len < best) best = len;
                }
            }
        }
    }
    return best;
}

}  // namespace wiener
