// Signed graphs: one sign per edge in lexicographic edge order, signed
// distance as the minimum absolute path sign sum over simple paths, and the
// derived signed Wiener machinery.
#pragma once

#include <algorithm>
#include <bit>
#include <climits>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <vector>

#include "graph.hpp"

namespace wiener {

struct SignedGraph {
    Graph base;
    uint64_t negatives = 0;  // bit e set: edge e carries sign -1

    static auto constant(const Graph& g, int sign = 1) -> SignedGraph {
        if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        SignedGraph s{g, 0};
        if (sign == -1) s.negatives = (g.edge_count() == 0) ? 0 : (~uint64_t{0} >> (64 - g.edge_count()));
        return s;
    }

    static auto from_signs(const Graph& g, const std::vector<int>& signs) -> SignedGraph {
        if (static_cast<long long>(signs.size()) != g.edge_count())
            throw std::invalid_argument("one sign per edge required");
        SignedGraph s{g, 0};
        for (size_t e = 0; e < signs.size(); ++e) {
            if (signs[e] != 1 && signs[e] != -1) throw std::invalid_argument("sign must be +1 or -1");
            if (signs[e] == -1) s.negatives |= uint64_t{1} << e;
        }
        return s;
    }

    auto sign(size_t e) const -> int { return negatives >> e & 1 ? -1 : 1; }

    void set_sign(int u, int v, int sign) {
        if (sign != 1 && sign != -1) throw std::invalid_argument("sign must be +1 or -1");
        auto edges = base.edges();
        for (size_t e = 0; e < edges.size(); ++e)
            if ((edges[e].first == u && edges[e].second == v) || (edges[e].first == v && edges[e].second == u)) {
                if (sign == -1)
                    negatives |= uint64_t{1} << e;
                else
                    negatives &= ~(uint64_t{1} << e);
                return;
            }
        throw std::invalid_argument("no such edge");
    }

    auto signs() const -> std::vector<int> {
        std::vector<int> out(base.edge_count());
        for (size_t e = 0; e < out.size(); ++e) out[e] = sign(e);
        return out;
    }
};

namespace detail {

struct SignMatrix {
    int8_t at[kMaxVertices][kMaxVertices] = {};
};

inline auto sign_matrix(const SignedGraph& s) -> SignMatrix {
    SignMatrix m;
    auto edges = s.base.edges();
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        m.at[u][v] = m.at[v][u] = static_cast<int8_t>(s.sign(e));
    }
    return m;
}

// Minimum |sign sum| over simple u,v-paths by exhaustive DFS with an early
// exit once a zero path appears.
inline void signed_path_dfs(const Graph& g, const SignMatrix& sgn, int u, int target, uint64_t visited,
                            int sum, int& best) {
    if (u == target) {
        int a = std::abs(sum);
        if (a < best) best = a;
        return;
    }
    for (uint64_t m = g.adj[u] & ~visited; m != 0 && best > 0; m &= m - 1) {
        int w = std::countr_zero(m);
        signed_path_dfs(g, sgn, w, target, visited | uint64_t{1} << w, sum + sgn.at[u][w], best);
    }
}

// On trees the unique path gives the value directly.
inline auto tree_signed_sum(const Graph& g, const SignMatrix& sgn, int u, int v) -> int {
    int parent[kMaxVertices];
    uint8_t dist[kMaxVertices];
    for (int x = 0; x < g.n; ++x) parent[x] = -1;
    bfs_distances(g, u, dist);
    // rebuild parents by BFS layering
    for (int x = 0; x < g.n; ++x)
        if (x != u && dist[x] != kUnreachable)
            for (uint64_t m = g.adj[x]; m != 0; m &= m - 1) {
                int w = std::countr_zero(m);
                if (dist[w] + 1 == dist[x]) {
                    parent[x] = w;
                    break;
                }
            }
    int sum = 0;
    for (int x = v; x != u; x = parent[x]) sum += sgn.at[x][parent[x]];
    return sum;
}

}  // namespace detail

inline auto signed_distance(const SignedGraph& s, int u, int v) -> long long {
    if (u == v) throw std::invalid_argument("signed distance needs distinct vertices");
    const Graph& g = s.base;
    if (!(reachable_set(g, uint64_t{1} << u) >> v & 1))
        throw std::invalid_argument("signed distance undefined between components");
    auto sgn = detail::sign_matrix(s);
    if (is_tree(g)) return std::abs(detail::tree_signed_sum(g, sgn, u, v));
    if (g.n > 14) throw std::invalid_argument("signed distance search limited to n <= 14");
    int best = INT_MAX;
    detail::signed_path_dfs(g, sgn, u, v, uint64_t{1} << u, 0, best);
    return best;
}

inline auto signed_wiener(const SignedGraph& s) -> long long {
    const Graph& g = s.base;
    if (!is_connected(g)) throw std::invalid_argument("signed wiener undefined on disconnected graph");
    auto sgn = detail::sign_matrix(s);
    long long total = 0;
    if (is_tree(g)) {
        for (int u = 0; u < g.n; ++u)
            for (int v = u + 1; v < g.n; ++v) total += std::abs(detail::tree_signed_sum(g, sgn, u, v));
        return total;
    }
    if (g.n > 14) throw std::invalid_argument("signed distance search limited to n <= 14");
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            int best = INT_MAX;
            detail::signed_path_dfs(g, sgn, u, v, uint64_t{1} << u, 0, best);
            total += best;
        }
    return total;
}

constexpr int kMaxSignatureEdges = 22;

struct SignatureSearch {
    long long value = 0;
    std::vector<uint64_t> argmin;
};

// Exact minimum of the signed Wiener index over all signatures; the global
// flip leaves every |sign sum| unchanged, so only half the space is scanned
// and complements are filled back into the argmin list.
inline auto min_signed_wiener(const Graph& g) -> SignatureSearch {
    long long m = g.edge_count();
    if (m > kMaxSignatureEdges) throw std::invalid_argument("signature search limited to 22 edges");
    SignatureSearch out;
    if (m == 0) {
        out.value = signed_wiener(SignedGraph{g, 0});
        out.argmin = {0};
        return out;
    }
    uint64_t half = uint64_t{1} << (m - 1);
    uint64_t full = (uint64_t{1} << m) - 1;
    long long best = LLONG_MAX;
    std::vector<uint64_t> args;
    for (uint64_t sig = 0; sig < half; ++sig) {
        long long w = signed_wiener(SignedGraph{g, sig});
        if (w < best) {
            best = w;
            args.clear();
        }
        if (w == best) args.push_back(sig);
    }
    out.value = best;
    out.argmin.reserve(args.size() * 2);
    for (uint64_t sig : args) {
        out.argmin.push_back(sig);
        out.argmin.push_back(~sig & full);
    }
    std::sort(out.argmin.begin(), out.argmin.end());
    return out;
}

enum class CancelingStatus { canceling, not_canceling, undefined_removal };

inline auto describe(CancelingStatus st) -> const char* {
    switch (st) {
        case CancelingStatus::canceling: return "canceling";
        case CancelingStatus::not_canceling: return "not canceling";
        default: return "undefined removal encountered";
    }
}

// Restriction of the signature to an induced subgraph (drop = vertex bits to
// delete), relying on the order-preserving vertex relabeling.
inline auto restrict_signed(const SignedGraph& s, uint64_t drop) -> SignedGraph {
    Graph sub = delete_vertices(s.base, drop);
    int remap[kMaxVertices];
    int next = 0;
    for (int v = 0; v < s.base.n; ++v) remap[v] = (drop >> v & 1) ? -1 : next++;
    auto sgn = detail::sign_matrix(s);
    SignedGraph out{sub, 0};
    auto edges = sub.edges();
    std::vector<int> orig(s.base.n);
    for (int v = 0; v < s.base.n; ++v)
        if (remap[v] >= 0) orig[remap[v]] = v;
    for (size_t e = 0; e < edges.size(); ++e)
        if (sgn.at[orig[edges[e].first]][orig[edges[e].second]] == -1) out.negatives |= uint64_t{1} << e;
    return out;
}

// k-canceling: W_sigma(G-S) = 0 for every vertex set with |S| < k.  A
// removal that disconnects the remainder leaves the value undefined and is
// reported as such instead of passing or failing silently.
inline auto k_canceling_status(const SignedGraph& s, int k) -> CancelingStatus {
    if (k < 1) throw std::invalid_argument("k must be positive");
    int n = s.base.n;
    std::vector<uint64_t> subsets{0};
    size_t lo = 0;
    for (int size = 1; size < k; ++size) {
        size_t hi = subsets.size();
        for (size_t i = lo; i < hi; ++i) {
            uint64_t prev = subsets[i];
            int top = prev == 0 ? -1 : 63 - std::countl_zero(prev);
            for (int v = top + 1; v < n; ++v) subsets.push_back(prev | uint64_t{1} << v);
        }
        lo = hi;
    }
    for (uint64_t drop : subsets) {
        SignedGraph sub = restrict_signed(s, drop);
        if (sub.base.n <= 1) continue;
        if (!is_connected(sub.base)) return CancelingStatus::undefined_removal;
        if (signed_wiener(sub) != 0) return CancelingStatus::not_canceling;
    }
    return CancelingStatus::canceling;
}

inline auto is_k_canceling(const SignedGraph& s, int k) -> bool {
    return k_canceling_status(s, k) == CancelingStatus::canceling;
}

// First signature (in increasing integer order) making g k-canceling, if
// any; the flip pair partner never precedes its partner, so scanning the
// half space with top bit clear is exhaustive.
inline auto exists_k_canceling(const Graph& g, int k) -> std::optional<uint64_t> {
    long long m = g.edge_count();
    if (m > kMaxSignatureEdges) throw std::invalid_argument("signature search limited to 22 edges");
    uint64_t half = m == 0 ? 1 : uint64_t{1} << (m - 1);
    for (uint64_t sig = 0; sig < half; ++sig)
        if (k_canceling_status(SignedGraph{g, sig}, k) == CancelingStatus::canceling) return sig;
    return std::nullopt;
}

}  // namespace wiener
