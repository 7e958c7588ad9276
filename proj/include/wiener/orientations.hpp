// Orientation search over the 2^m direction space, coloring-induced
// orientations, and the named extremal orientations.
#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "coloring.hpp"
#include "digraph.hpp"
#include "graph.hpp"

namespace wiener {

// Direction bit per base edge in lexicographic edge order: bit clear means
// the arc runs from the lower to the higher endpoint.
struct Orientation {
    Graph base;
    uint64_t dirs = 0;

    auto to_digraph() const -> Digraph {
        Digraph d = Digraph::empty(base.n);
        auto edges = base.edges();
        for (size_t e = 0; e < edges.size(); ++e) {
            auto [u, v] = edges[e];
            if (dirs >> e & 1)
                d.add_arc(v, u);
            else
                d.add_arc(u, v);
        }
        return d;
    }
};

constexpr int kMaxOrientationEdges = 30;

// Visits every orientation of g exactly once in increasing direction-vector
// order; with sharding, shard i owns the vectors congruent to i mod shards.
// Arcs are flipped incrementally between consecutive visits.
template <typename Visit>
void enumerate_orientations(const Graph& g, Visit&& visit, int shard = 0, int shards = 1) {
    long long m = g.edge_count();
    if (m > kMaxOrientationEdges) throw std::invalid_argument("orientation enumeration limited to 30 edges");
    if (shards < 1 || shard < 0 || shard >= shards) throw std::invalid_argument("bad shard specification");
    auto edges = g.edges();
    uint64_t total = uint64_t{1} << m;
    if (static_cast<uint64_t>(shard) >= total) return;
    uint64_t dirs = shard;
    Digraph d = Digraph::empty(g.n);
    for (size_t e = 0; e < edges.size(); ++e) {
        auto [u, v] = edges[e];
        if (dirs >> e & 1)
            d.add_arc(v, u);
        else
            d.add_arc(u, v);
    }
    for (;;) {
        visit(dirs, d);
        uint64_t next = dirs + shards;
        if (next >= total || next < dirs) break;
        uint64_t diff = dirs ^ next;
        for (size_t e = 0; e < edges.size(); ++e)
            if (diff >> e & 1) {
                auto [u, v] = edges[e];
                if (next >> e & 1) {
                    d.remove_arc(u, v);
                    d.add_arc(v, u);
                } else {
                    d.remove_arc(v, u);
                    d.add_arc(u, v);
                }
            }
        dirs = next;
    }
}

enum class OrientationFilter { all, acyclic, strong };

struct OrientationSearch {
    long long max_value = LLONG_MIN;
    long long min_value = LLONG_MAX;
    std::vector<uint64_t> argmax, argmin;
    unsigned long long visited = 0, accepted = 0;

    void observe(uint64_t dirs, long long w) {
        ++accepted;
        if (w > max_value) {
            max_value = w;
            argmax.clear();
        }
        if (w == max_value) argmax.push_back(dirs);
        if (w < min_value) {
            min_value = w;
            argmin.clear();
        }
        if (w == min_value) argmin.push_back(dirs);
    }

    void merge(const OrientationSearch& o) {
        visited += o.visited;
        accepted += o.accepted;
        auto fold = [](long long& best, std::vector<uint64_t>& args, long long value,
                       const std::vector<uint64_t>& more, bool maximize) {
            if (more.empty()) return;
            bool better = maximize ? value > best : value < best;
            if (better) {
                best = value;
                args = more;
            } else if (value == best) {
                std::vector<uint64_t> merged;
                std::merge(args.begin(), args.end(), more.begin(), more.end(), std::back_inserter(merged));
                args = std::move(merged);
            }
        };
        fold(max_value, argmax, o.max_value, o.argmax, true);
        fold(min_value, argmin, o.min_value, o.argmin, false);
    }
};

inline auto orientation_extremes(const Graph& g, OrientationFilter filter = OrientationFilter::all,
                                 int shard = 0, int shards = 1) -> OrientationSearch {
    OrientationSearch out;
    enumerate_orientations(
        g,
        [&](uint64_t dirs, const Digraph& d) {
            ++out.visited;
            if (filter == OrientationFilter::acyclic && !is_acyclic(d)) return;
            if (filter == OrientationFilter::strong && !is_strongly_connected(d)) return;
            out.observe(dirs, digraph_wiener(d));
        },
        shard, shards);
    return out;
}

// Arc from the bigger to the smaller color; the coloring must be proper.
inline auto coloring_induced_orientation(const Graph& g, const std::vector<int>& colors) -> Digraph {
    Digraph d = Digraph::empty(g.n);
    for (auto [u, v] : g.edges()) {
        if (colors[u] == colors[v]) throw std::invalid_argument("coloring is not proper");
        if (colors[u] > colors[v])
            d.add_arc(u, v);
        else
            d.add_arc(v, u);
    }
    return d;
}

struct ColoringOrientationScan {
    unsigned long long colorings = 0;
    bool below_chromatic = false;
};

// One orientation per proper k-coloring; zero colorings means k < chi(G)
// and the scan is flagged accordingly.
template <typename Visit>
auto coloring_induced_orientations(const Graph& g, int k, Visit&& visit) -> ColoringOrientationScan {
    ColoringOrientationScan scan;
    proper_colorings(g, k, [&](const std::vector<int>& colors) {
        ++scan.colorings;
        visit(coloring_induced_orientation(g, colors));
    });
    scan.below_chromatic = scan.colorings == 0 && g.n > 0;
    return scan;
}

inline auto directed_cycle(int n) -> Digraph {
    if (n < 3) throw std::invalid_argument("directed cycle needs n >= 3");
    Digraph d = Digraph::empty(n);
    for (int v = 0; v < n; ++v) d.add_arc(v, (v + 1) % n);
    return d;
}

// Maximum-Wiener orientation of the theta graph: the two longer paths form
// a directed cycle through both hubs, and the third path takes the best of
// its 2^(c+1) assignments (first one in direction-vector order on ties).
inline auto theta_max(int a, int b, int c) -> Digraph {
    Digraph d = Digraph::empty(a + b + c + 2);
    int prev = 0;
    for (int i = 0; i < a; ++i) {
        d.add_arc(prev, 2 + i);
        prev = 2 + i;
    }
    d.add_arc(prev, 1);
    prev = 1;
    for (int i = b - 1; i >= 0; --i) {
        d.add_arc(prev, 2 + a + i);
        prev = 2 + a + i;
    }
    d.add_arc(prev, 0);

    // third-path vertices in base order: 0, then the c internals, then 1
    std::vector<int> chain;
    chain.push_back(0);
    for (int i = 0; i < c; ++i) chain.push_back(2 + a + b + i);
    chain.push_back(1);

    Digraph best = d;
    long long best_w = LLONG_MIN;
    for (uint64_t mask = 0; mask < uint64_t{1} << (c + 1); ++mask) {
        Digraph cand = d;
        for (int e = 0; e <= c; ++e) {
            if (mask >> e & 1)
                cand.add_arc(chain[e + 1], chain[e]);
            else
                cand.add_arc(chain[e], chain[e + 1]);
        }
        long long w = digraph_wiener(cand);
        if (w > best_w) {
            best_w = w;
            best = cand;
        }
    }
    return best;
}

namespace detail {

// 1-based grid coordinates, row i from the top, column j from the left.
inline auto grid_vertex(int cols, int i, int j) -> int { return (i - 1) * cols + (j - 1); }

}  // namespace detail

// Orientation D_{m,n} of the m x n grid: top row to the right, the other
// rows to the left, the last column down, every other column up.
inline auto grid_d(int m, int n) -> Digraph {
    if (m < 2 || n < 2) throw std::invalid_argument("grid orientations need m,n >= 2");
    if (m * n > kMaxVertices) throw std::invalid_argument("grid exceeds 64 vertices");
    Digraph d = Digraph::empty(m * n);
    auto at = [&](int i, int j) { return detail::grid_vertex(n, i, j); };
    for (int j = 1; j < n; ++j) d.add_arc(at(1, j), at(1, j + 1));
    for (int i = 2; i <= m; ++i)
        for (int j = 1; j < n; ++j) d.add_arc(at(i, j + 1), at(i, j));
    for (int i = 1; i < m; ++i) {
        for (int j = 1; j < n; ++j) d.add_arc(at(i + 1, j), at(i, j));
        d.add_arc(at(i, n), at(i + 1, n));
    }
    return d;
}

// Comb orientation C_{m,n} (n even >= 4, m >= 3): the top row plus a
// zig-zag through the lower rows forms a directed Hamiltonian cycle; the
// remaining edges avoid shortcutting it.
inline auto grid_c(int m, int n) -> Digraph {
    if (m < 3 || n < 4 || n % 2 != 0) throw std::invalid_argument("comb orientation needs m >= 3 and even n >= 4");
    if (m * n > kMaxVertices) throw std::invalid_argument("grid exceeds 64 vertices");
    Digraph d = Digraph::empty(m * n);
    auto at = [&](int i, int j) { return detail::grid_vertex(n, i, j); };

    // the Hamiltonian cycle walk
    std::vector<int> walk;
    for (int j = 1; j <= n; ++j) walk.push_back(at(1, j));
    for (int i = 2; i <= m; ++i) walk.push_back(at(i, n));
    for (int j = n - 1; j >= 2; --j) {
        if (j % 2 == 1)
            for (int i = m; i >= 2; --i) walk.push_back(at(i, j));
        else
            for (int i = 2; i <= m; ++i) walk.push_back(at(i, j));
    }
    for (int i = m; i >= 2; --i) walk.push_back(at(i, 1));
    for (size_t k = 0; k < walk.size(); ++k) d.add_arc(walk[k], walk[(k + 1) % walk.size()]);

    // non-cycle edges
    for (int j = 2; j < n; ++j) d.add_arc(at(2, j), at(1, j));
    for (int j = 1; j < n; j += 2) d.add_arc(at(2, j), at(2, j + 1));
    for (int j = 2; j < n - 1; j += 2) d.add_arc(at(m, j), at(m, j + 1));
    for (int i = 3; i < m; ++i)
        for (int j = 1; j < n; ++j) d.add_arc(at(i, j), at(i, j + 1));
    return d;
}

// Zig-zag counterexample orientation: path w_1..w_k toward w_k, leaves into
// w_1, a 5-path hanging off w_2 oriented away, one leaf into w_3.
inline auto dankelmann(int k) -> Digraph {
    if (k < 3 || k % 3 != 0) throw std::invalid_argument("dankelmann needs k a positive multiple of 3");
    int leaves = k * k / 9;
    int n = k + leaves + 6;
    if (n > kMaxVertices) throw std::invalid_argument("dankelmann tree exceeds 64 vertices");
    Digraph d = Digraph::empty(n);
    for (int i = 0; i + 1 < k; ++i) d.add_arc(i, i + 1);
    for (int j = 0; j < leaves; ++j) d.add_arc(k + j, 0);
    int x1 = k + leaves;
    d.add_arc(1, x1);
    for (int i = 0; i < 4; ++i) d.add_arc(x1 + i, x1 + i + 1);
    d.add_arc(x1 + 5, 2);
    return d;
}

}  // namespace wiener
