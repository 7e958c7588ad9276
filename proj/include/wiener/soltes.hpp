// Vertex-deletion Wiener ledger: per-vertex differences W(G) - W(G-v),
// the vertices attaining a given level, and the minimum-degree guard.
#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace wiener {

struct SoltesProfile {
    int n = 0;
    std::vector<std::optional<std::int64_t>> delta;  // empty optional: removal disconnects
    std::uint64_t soltes_set = 0;                    // vertices with defined delta = 0
    int soltes_count = 0;
    bool is_soltes_graph = false;
    int proportion_num = 0, proportion_den = 1;  // soltes_count / n, reduced
};

inline auto soltes_profile(const Graph& g) -> SoltesProfile {
    if (g.n < 3) throw std::invalid_argument("profile needs n >= 3");
    if (!is_connected(g)) throw std::invalid_argument("wiener undefined on disconnected graph");
    SoltesProfile out;
    out.n = g.n;
    out.delta.resize(g.n);
    std::int64_t w = wiener_index(g);
    for (int v = 0; v < g.n; ++v) {
        Graph rest = delete_vertices(g, std::uint64_t{1} << v);
        if (!is_connected(rest)) continue;
        out.delta[v] = w - wiener_index(rest);
        if (*out.delta[v] == 0) {
            out.soltes_set |= std::uint64_t{1} << v;
            ++out.soltes_count;
        }
    }
    out.is_soltes_graph = out.soltes_count == g.n;
    int d = std::gcd(out.soltes_count, g.n);
    out.proportion_num = out.soltes_count / d;
    out.proportion_den = g.n / d;
    return out;
}

inline auto delta_for_set(const Graph& g, std::uint64_t drop) -> std::int64_t {
    if (!is_connected(g)) throw std::invalid_argument("wiener undefined on disconnected graph");
    Graph rest = delete_vertices(g, drop);
    if (rest.n == 0 || !is_connected(rest)) throw std::invalid_argument("undefined removal");
    return wiener_index(g) - wiener_index(rest);
}

inline auto z_level_vertices(const Graph& g, std::int64_t z) -> std::uint64_t {
    auto profile = soltes_profile(g);
    std::uint64_t set = 0;
    for (int v = 0; v < g.n; ++v)
        if (profile.delta[v] && *profile.delta[v] == z) set |= std::uint64_t{1} << v;
    return set;
}

struct MinDegreeGuard {
    bool applies = false;   // minimum degree at least n/2
    bool violated = false;  // guard applies yet some vertex removal preserves W
};

inline auto min_degree_guard_check(const Graph& g) -> MinDegreeGuard {
    MinDegreeGuard out;
    int delta = g.n;
    for (int v = 0; v < g.n; ++v) delta = std::min(delta, g.degree(v));
    out.applies = 2 * delta >= g.n;
    if (out.applies && g.n >= 3) out.violated = soltes_profile(g).soltes_count > 0;
    return out;
}

// Exact longest cycle by DFS over simple paths whose minimum vertex is the
// start; 0 on forests.
inline auto circumference(const Graph& g) -> int {
    if (g.n > 12) throw std::invalid_argument("circumference search limited to n <= 12");
    int best = 0;
    for (int s = 0; s < g.n && g.n - s > best; ++s) {
        std::uint64_t allowed = ~((std::uint64_t{1} << s) - 1);
        auto dfs = [&](auto&& self, int u, int len, std::uint64_t visited) -> void {
            for (std::uint64_t m = g.adj[u] & allowed; m != 0; m &= m - 1) {
                int w = std::countr_zero(m);
                if (w == s) {
                    if (len >= 2 && len + 1 > best) best = len + 1;
                } else if (!(visited >> w & 1)) {
                    self(self, w, len + 1, visited | std::uint64_t{1} << w);
                }
                if (best == g.n) return;
            }
        };
        dfs(dfs, s, 0, std::uint64_t{1} << s);
    }
    return best;
}

}  // namespace wiener
