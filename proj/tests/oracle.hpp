// Slow, independent reference implementations used only by the test suite:
// Floyd-Warshall distances, factorial-time isomorphism, and a labeled-graph
// enumeration oracle that dedups by marking whole permutation orbits.
#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "wiener/graph.hpp"

namespace oracle {

constexpr int kInf = 1 << 20;

inline auto floyd_warshall(const wiener::Graph& g) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> d(g.n, std::vector<int>(g.n, kInf));
    for (int v = 0; v < g.n; ++v) d[v][v] = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (g.has_edge(u, v)) d[u][v] = 1;
    for (int k = 0; k < g.n; ++k)
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return d;
}

inline auto slow_wiener(const wiener::Graph& g) -> std::int64_t {
    auto d = floyd_warshall(g);
    std::int64_t w = 0;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j) w += d[i][j];
    return w;
}

inline auto isomorphic(const wiener::Graph& a, const wiener::Graph& b) -> bool {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            for (int v = u + 1; v < a.n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// All automorphisms of g by brute force (n small).
inline auto all_automorphisms(const wiener::Graph& g) -> std::vector<std::vector<int>> {
    std::vector<std::vector<int>> out;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < g.n && ok; ++u)
            for (int v = u + 1; v < g.n && ok; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) ok = false;
        if (ok) out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

inline auto random_connected_graph(int n, double p, std::mt19937_64& rng) -> wiener::Graph {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (;;) {
        wiener::Graph g = wiener::Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng) < p) g.add_edge(u, v);
        if (wiener::is_connected(g)) return g;
    }
}

inline auto random_tree(int n, std::mt19937_64& rng) -> wiener::Graph {
    wiener::Graph g = wiener::Graph::empty(n);
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        g.add_edge(v, pick(rng));
    }
    return g;
}

// Visits one representative per isomorphism class of connected graphs on
// exactly n vertices by scanning all 2^C(n,2) labeled graphs and marking the
// full permutation orbit of each class found.  Independent of the library's
// generator: no canonical forms, no augmentation.
template <class Visit>
void labeled_connected_classes(int n, Visit&& visit) {
    const int pairs = n * (n - 1) / 2;
    std::vector<std::pair<int, int>> pair_of(pairs);
    int idx[wiener::kMaxVertices][wiener::kMaxVertices] = {};
    {
        int k = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                pair_of[k] = {u, v};
                idx[u][v] = k;
                ++k;
            }
    }
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perm_maps;  // edge-index remap per permutation
    do {
        std::vector<int> map(pairs);
        for (int k = 0; k < pairs; ++k) {
            auto [u, v] = pair_of[k];
            int a = perm[u], b = perm[v];
            if (a > b) std::swap(a, b);
            map[k] = idx[a][b];
        }
        perm_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::uint64_t> seen((std::uint64_t{1} << pairs) / 64 + 1, 0);
    auto test = [&](std::uint64_t m) { return (seen[m >> 6] >> (m & 63)) & 1u; };
    auto mark = [&](std::uint64_t m) { seen[m >> 6] |= std::uint64_t{1} << (m & 63); };

    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        if (test(mask)) continue;
        wiener::Graph g = wiener::Graph::empty(n);
        for (std::uint64_t m = mask; m; m &= m - 1) {
            auto [u, v] = pair_of[std::countr_zero(m)];
            g.add_edge(u, v);
        }
        if (!wiener::is_connected(g)) continue;
        visit(g);
        for (const auto& map : perm_maps) {
            std::uint64_t image = 0;
            for (std::uint64_t m = mask; m; m &= m - 1)
                image |= std::uint64_t{1} << map[std::countr_zero(m)];
            mark(image);
        }
    }
}

}  // namespace oracle
