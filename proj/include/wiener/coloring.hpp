// Exact chromatic number (branch and bound over color classes) and raw
// enumeration of all proper k-colorings.  Both are desk-scale tools with an
// explicit vertex-count guard.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace wiener {

constexpr int kChromaticMax = 20;

namespace detail {

inline auto greedy_clique(const Graph& g) -> int {
    // degeneracy-ordered greedy clique, a quick lower bound
    std::uint64_t best = 0;
    for (int s = 0; s < g.n; ++s) {
        std::uint64_t clique = std::uint64_t{1} << s;
        std::uint64_t cand = g.adj[s];
        while (cand) {
            int pick = -1, pick_deg = -1;
            for (std::uint64_t m = cand; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int d = std::popcount(g.adj[v] & cand);
                if (d > pick_deg) pick = v, pick_deg = d;
            }
            clique |= std::uint64_t{1} << pick;
            cand &= g.adj[pick];
        }
        if (std::popcount(clique) > std::popcount(best)) best = clique;
    }
    return std::popcount(best);
}

inline auto colorable(const Graph& g, int k) -> bool {
    // vertices in degree-descending order, assign colors with symmetry break
    std::vector<int> verts(g.n);
    for (int i = 0; i < g.n; ++i) verts[i] = i;
    std::sort(verts.begin(), verts.end(),
              [&](int a, int b) { return g.degree(a) > g.degree(b); });
    std::vector<std::uint64_t> color_mask(k, 0);
    std::function<bool(int, int)> go = [&](int i, int used) -> bool {
        if (i == g.n) return true;
        int v = verts[i];
        int limit = std::min(k, used + 1);
        for (int c = 0; c < limit; ++c) {
            if (color_mask[c] & g.adj[v]) continue;
            color_mask[c] |= std::uint64_t{1} << v;
            if (go(i + 1, std::max(used, c + 1))) return true;
            color_mask[c] &= ~(std::uint64_t{1} << v);
        }
        return false;
    };
    return go(0, 0);
}

}  // namespace detail

inline auto chromatic_number(const Graph& g) -> int {
    if (g.n > kChromaticMax)
        throw std::invalid_argument("chromatic number limited to n <= 20");
    if (g.n == 0) return 0;
    if (g.edge_count() == 0) return 1;
    if (is_bipartite(g)) return 2;
    int lo = std::max(3, detail::greedy_clique(g));
    for (int k = lo;; ++k)
        if (detail::colorable(g, k)) return k;
}

// Calls visit(colors) for every proper coloring with colors drawn from
// {0,...,k-1}.  All assignments are visited, including color permutations.
template <class Visit>
void proper_colorings(const Graph& g, int k, Visit&& visit) {
    if (g.n > kChromaticMax)
        throw std::invalid_argument("coloring enumeration limited to n <= 20");
    std::vector<int> colors(g.n, -1);
    std::function<void(int)> go = [&](int v) {
        if (v == g.n) {
            visit(const_cast<const std::vector<int>&>(colors));
            return;
        }
        std::uint64_t lower = g.adj[v] & vertex_mask(v);
        for (int c = 0; c < k; ++c) {
            bool clash = false;
            for (std::uint64_t m = lower; m && !clash; m &= m - 1)
                if (colors[std::countr_zero(m)] == c) clash = true;
            if (clash) continue;
            colors[v] = c;
            go(v + 1);
            colors[v] = -1;
        }
    };
    go(0);
}

}  // namespace wiener
