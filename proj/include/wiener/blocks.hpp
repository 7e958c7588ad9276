// Block decomposition (biconnected components) via iterative DFS with an
// edge stack.  Blocks are reported as vertex masks in a deterministic order;
// isolated vertices count as their own blocks.
#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace wiener {

struct BlockDecomposition {
    std::vector<std::uint64_t> block_masks;   // vertex set per block
    std::vector<int> block_edge_counts;
    std::uint64_t cut_vertices = 0;
    bool all_blocks_complete = false;
    bool is_cactus = false;

    auto block_count() const -> int { return static_cast<int>(block_masks.size()); }
};

inline auto blocks(const Graph& g) -> BlockDecomposition {
    BlockDecomposition out;
    std::vector<int> depth(g.n, -1), low(g.n, 0), parent(g.n, -1);
    std::vector<std::pair<int, int>> edge_stack;

    struct Frame {
        int v;
        std::uint64_t pending;
    };
    std::vector<Frame> stack;

    for (int root = 0; root < g.n; ++root) {
        if (depth[root] >= 0) continue;
        if (g.adj[root] == 0) {
            out.block_masks.push_back(std::uint64_t{1} << root);
            out.block_edge_counts.push_back(0);
            depth[root] = 0;
            continue;
        }
        int root_children = 0;
        depth[root] = 0;
        low[root] = 0;
        stack.push_back({root, g.adj[root]});
        while (!stack.empty()) {
            auto& fr = stack.back();
            if (fr.pending) {
                int w = std::countr_zero(fr.pending);
                fr.pending &= fr.pending - 1;
                if (depth[w] < 0) {
                    if (fr.v == root) ++root_children;
                    parent[w] = fr.v;
                    depth[w] = depth[fr.v] + 1;
                    low[w] = depth[w];
                    edge_stack.emplace_back(fr.v, w);
                    stack.push_back({w, g.adj[w]});
                } else if (w != parent[fr.v] && depth[w] < depth[fr.v]) {
                    edge_stack.emplace_back(fr.v, w);
                    low[fr.v] = std::min(low[fr.v], depth[w]);
                }
                continue;
            }
            int v = fr.v;
            stack.pop_back();
            if (stack.empty()) break;
            int u = stack.back().v;
            low[u] = std::min(low[u], low[v]);
            if (low[v] >= depth[u]) {
                // edges from (u,v) onward form one block
                std::uint64_t mask = 0;
                int edges = 0;
                while (!edge_stack.empty()) {
                    auto [a, b] = edge_stack.back();
                    edge_stack.pop_back();
                    mask |= (std::uint64_t{1} << a) | (std::uint64_t{1} << b);
                    ++edges;
                    if (a == u && b == v) break;
                }
                out.block_masks.push_back(mask);
                out.block_edge_counts.push_back(edges);
                if (u != root) out.cut_vertices |= std::uint64_t{1} << u;
            }
        }
        if (root_children > 1) out.cut_vertices |= std::uint64_t{1} << root;
    }

    out.all_blocks_complete = true;
    out.is_cactus = true;
    for (std::size_t b = 0; b < out.block_masks.size(); ++b) {
        int k = std::popcount(out.block_masks[b]);
        int m = out.block_edge_counts[b];
        if (m != k * (k - 1) / 2) out.all_blocks_complete = false;
        if (!(m == 0 || (k == 2 && m == 1) || (k >= 3 && m == k))) out.is_cactus = false;
    }
    return out;
}

inline auto cut_vertex_mask(const Graph& g) -> std::uint64_t { return blocks(g).cut_vertices; }

inline auto is_two_connected(const Graph& g) -> bool {
    return g.n >= 3 && is_connected(g) && blocks(g).block_count() == 1;
}

}  // namespace wiener
