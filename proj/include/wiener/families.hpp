// Named graph constructions.  Attachment points follow a lowest-index rule
// so every builder is deterministic; preconditions throw with a short
// message.  Vertex layouts are documented per builder where tests rely on
// specific indices.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"
#include "graph_ops.hpp"

namespace wiener {

inline auto path_graph(int n) -> Graph {
    Graph g = Graph::empty(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

inline auto cycle_graph(int n) -> Graph {
    if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

// Center is vertex 0.
inline auto star_graph(int n) -> Graph {
    if (n < 1) throw std::invalid_argument("star needs n >= 1");
    Graph g = Graph::empty(n);
    for (int v = 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

inline auto complete_graph(int n) -> Graph {
    Graph g = Graph::empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

// First part is 0..a-1.
inline auto complete_bipartite(int a, int b) -> Graph {
    if (a < 1 || b < 1) throw std::invalid_argument("complete bipartite needs parts >= 1");
    Graph g = Graph::empty(a + b);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
    return g;
}

inline auto circulant(int n, const std::vector<int>& jumps) -> Graph {
    Graph g = Graph::empty(n);
    for (int s : jumps) {
        if (s < 1 || 2 * s > n) throw std::invalid_argument("circulant jump out of range");
        for (int v = 0; v < n; ++v) {
            int w = (v + s) % n;
            if (v != w) g.add_edge(v, w);
        }
    }
    return g;
}

// Outer cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline auto petersen() -> Graph {
    Graph g = Graph::empty(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(5 + i, 5 + (i + 2) % 5);
        g.add_edge(i, 5 + i);
    }
    return g;
}

// 14-cycle plus chords {i, i+5} for even i.
inline auto heawood() -> Graph {
    Graph g = cycle_graph(14);
    for (int i = 0; i < 14; i += 2) g.add_edge(i, (i + 5) % 14);
    return g;
}

inline auto hypercube_q3() -> Graph {
    Graph g = Graph::empty(8);
    for (int u = 0; u < 8; ++u)
        for (int b = 0; b < 3; ++b)
            if (u < (u ^ (1 << b))) g.add_edge(u, u ^ (1 << b));
    return g;
}

// Broom: path on n-d+1 vertices 0..n-d, plus d-1 pendants on vertex 0, so
// vertex 0 has degree exactly d.
inline auto broom(int n, int d) -> Graph {
    if (d < 2 || d > n - 1) throw std::invalid_argument("broom needs 2 <= d <= n-1");
    Graph g = path_graph(n - d + 1);
    g.n = n;
    for (int v = n - d + 1; v < n; ++v) g.add_edge(0, v);
    return g;
}

// Double broom D(n,a,b): path on n-a-b vertices, a pendants on its first
// vertex, b pendants on its last.
inline auto double_broom(int n, int a, int b) -> Graph {
    int p = n - a - b;
    if (a < 1 || b < 1 || p < 2) throw std::invalid_argument("double broom needs a,b >= 1 and n-a-b >= 2");
    Graph g = path_graph(p);
    g.n = n;
    for (int v = 0; v < a; ++v) g.add_edge(0, p + v);
    for (int v = 0; v < b; ++v) g.add_edge(p - 1, p + a + v);
    return g;
}

// Theta graph: hubs 0 and 1 joined by three internally disjoint paths with
// a, b and c internal vertices (c = 0 means a direct edge).
inline auto theta_graph(int a, int b, int c) -> Graph {
    if (!(a >= b && b >= c && c >= 0 && b >= 1))
        throw std::invalid_argument("theta needs a >= b >= c >= 0 and b >= 1");
    Graph g = Graph::empty(a + b + c + 2);
    int next = 2;
    for (int len : {a, b, c}) {
        if (len == 0) {
            g.add_edge(0, 1);
            continue;
        }
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

// Dumbbell D_c(a,b): path vertices 0..c-1, K_a on c..c+a-1, K_b after it;
// vertex 0 joins the first clique vertex, vertex c-1 the second.
inline auto dumbbell(int a, int b, int c) -> Graph {
    if (a < 1 || b < 1 || a == 2 || b == 2 || c < 1)
        throw std::invalid_argument("dumbbell needs a,b >= 1, a,b != 2, c >= 1");
    Graph g = Graph::empty(a + b + c);
    for (int v = 0; v + 1 < c; ++v) g.add_edge(v, v + 1);
    for (int u = c; u < c + a; ++u)
        for (int v = u + 1; v < c + a; ++v) g.add_edge(u, v);
    for (int u = c + a; u < c + a + b; ++u)
        for (int v = u + 1; v < c + a + b; ++v) g.add_edge(u, v);
    g.add_edge(0, c);
    g.add_edge(c - 1, c + a);
    return g;
}

// Barbell variant with complete bipartite ends.
inline auto barbell(int a1, int a2, int b1, int b2, int c) -> Graph {
    if (a1 < 1 || a2 < 1 || b1 < 1 || b2 < 1 || c < 1)
        throw std::invalid_argument("barbell needs positive part sizes and c >= 1");
    Graph left = complete_bipartite(a1, a2);
    Graph right = complete_bipartite(b1, b2);
    int la = left.n, n = la + right.n + c;
    if (n > kMaxVertices) throw std::invalid_argument("barbell exceeds 64 vertices");
    Graph g = Graph::empty(n);
    for (int u = 0; u < la; ++u) g.adj[u] = left.adj[u];
    for (int v = 0; v < right.n; ++v) g.adj[la + v] = right.adj[v] << la;
    int p0 = la + right.n;
    for (int v = 0; v + 1 < c; ++v) g.add_edge(p0 + v, p0 + v + 1);
    g.add_edge(p0, 0);
    g.add_edge(p0 + c - 1, la);
    return g;
}

// K_c core 0..c-1 with n-c pendants spread as evenly as possible; the
// lower-indexed core vertices take the ceiling share.
inline auto clique_with_pendants(int n, int c) -> Graph {
    if (c < 1 || n < c) throw std::invalid_argument("clique_with_pendants needs 1 <= c <= n");
    Graph g = complete_graph(c);
    g.n = n;
    int pend = n - c, next = c;
    for (int v = 0; v < c; ++v) {
        int share = pend / c + (v < pend % c ? 1 : 0);
        for (int i = 0; i < share; ++i) g.add_edge(v, next++);
    }
    return g;
}

namespace detail {

// Root 0 with root_deg children; the first `heavy` children get k leaves
// each, the rest k-1 leaves each.
inline auto depth2_tree(int root_deg, int heavy, int k) -> Graph {
    int n = 1 + root_deg + heavy * k + (root_deg - heavy) * (k - 1);
    Graph g = Graph::empty(n);
    int next = 1 + root_deg;
    for (int i = 0; i < root_deg; ++i) {
        g.add_edge(0, 1 + i);
        int leaves = i < heavy ? k : k - 1;
        for (int j = 0; j < leaves; ++j) g.add_edge(1 + i, next++);
    }
    return g;
}

inline auto isqrt_floor(int x) -> int {
    int k = 0;
    while ((k + 1) * (k + 1) <= x) ++k;
    return k;
}

}  // namespace detail

// Maximum-Wiener diameter-4 tree, applicable when k^2 + k >= n - 1 for
// k = floor(sqrt(n-1)): root of degree k, n-k^2-1 neighbors of degree k+1,
// the rest of degree k.
inline auto diameter4_tree(int n) -> Graph {
    if (n < 5) throw std::invalid_argument("diameter-4 trees need n >= 5");
    int k = detail::isqrt_floor(n - 1);
    if (k * k + k < n - 1) throw std::invalid_argument("applicable-side violation");
    return detail::depth2_tree(k, n - k * k - 1, k);
}

// Companion tree, applicable when k^2 + k <= n - 1: root of degree k+1,
// n-k^2-k-1 neighbors of degree k+1, the rest of degree k.
inline auto diameter4_tree_prime(int n) -> Graph {
    if (n < 5) throw std::invalid_argument("diameter-4 trees need n >= 5");
    int k = detail::isqrt_floor(n - 1);
    if (k * k + k > n - 1) throw std::invalid_argument("applicable-side violation");
    return detail::depth2_tree(k + 1, n - k * k - k - 1, k);
}

inline auto diameter4_maximizers(int n) -> std::vector<Graph> {
    if (n < 5) throw std::invalid_argument("diameter-4 trees need n >= 5");
    int k = detail::isqrt_floor(n - 1);
    std::vector<Graph> out;
    if (k * k + k >= n - 1) out.push_back(diameter4_tree(n));
    if (k * k + k <= n - 1) out.push_back(diameter4_tree_prime(n));
    return out;
}

// H_{n,p,q}: hubs 0 and 1 joined by three internally disjoint paths of
// lengths p, q and n-p-q+1.
inline auto h_npq(int n, int p, int q) -> Graph {
    int r = n - p - q + 1;
    if (!(1 <= p && p <= q && q <= r && q > 1))
        throw std::invalid_argument("h_npq needs 1 <= p <= q <= n-p-q+1 and q > 1");
    Graph g = Graph::empty(n);
    int next = 2;
    for (int len : {p, q, r}) {
        int prev = 0;
        for (int i = 0; i < len - 1; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

// H^+_{n,2,2}: H_{n,2,2} plus an edge between the middle vertices of the two
// length-2 paths.
inline auto h_plus(int n) -> Graph {
    if (n < 7) throw std::invalid_argument("h_plus needs n >= 7");
    Graph g = h_npq(n, 2, 2);
    g.add_edge(2, 3);
    return g;
}

// G_{n,r,s}: a 2r-cycle with two consecutive vertices replaced by joined
// cliques K_s and K_{n-2r+2-s}; cycle neighbors attach completely to their
// clique.  Layout: 0 = v_1, 1 = v_4, 2..2r-5 = v_5..v_2r, then K_s, then the
// other clique.
inline auto g_nrs(int n, int r, int s) -> Graph {
    if (r < 3 || n < 2 * r || s < 1 || s > n - 2 * r + 1)
        throw std::invalid_argument("g_nrs needs r >= 3, n >= 2r, 1 <= s <= n-2r+1");
    int t = n - 2 * r + 2 - s;
    int rest = 2 * r - 4;  // cycle vertices strictly between v_4 and v_1
    Graph g = Graph::empty(n);
    // cycle remainder v_4 (index 1) - v_5 - ... - v_2r - v_1 (index 0)
    int prev = 1;
    for (int i = 2; i < 2 + rest; ++i) {
        g.add_edge(prev, i);
        prev = i;
    }
    g.add_edge(prev, 0);
    int sa = 2 + rest, sb = sa + s;
    for (int u = sa; u < sb; ++u)
        for (int v = u + 1; v < sb; ++v) g.add_edge(u, v);
    for (int u = sb; u < sb + t; ++u)
        for (int v = u + 1; v < sb + t; ++v) g.add_edge(u, v);
    for (int u = sa; u < sb; ++u)
        for (int v = sb; v < sb + t; ++v) g.add_edge(u, v);
    for (int u = sa; u < sb; ++u) g.add_edge(0, u);
    for (int v = sb; v < sb + t; ++v) g.add_edge(1, v);
    return g;
}

// K_k minus a Hamiltonian cycle, all k vertices joined to the first vertex
// of a path with l edges.  Order k + l + 1.
inline auto cambie_haslegrave(int k, int l) -> Graph {
    if (k < 5 || l < 1) throw std::invalid_argument("cambie_haslegrave needs k >= 5, l >= 1");
    if (k + l + 1 > kMaxVertices) throw std::invalid_argument("cambie_haslegrave exceeds 64 vertices");
    Graph g = complete_graph(k);
    for (int i = 0; i < k; ++i) g.remove_edge(i, (i + 1) % k);
    g.n = k + l + 1;
    for (int i = 0; i < k; ++i) g.add_edge(i, k);
    for (int i = 0; i < l; ++i) g.add_edge(k + i, k + i + 1);
    return g;
}

// B(k): hubs 0 and 1 joined by k paths with 5 internal vertices each and one
// path with 4 internal vertices.  Order 5k + 6.
inline auto soltes_b(int k) -> Graph {
    if (k < 2) throw std::invalid_argument("soltes_b needs k >= 2");
    if (5 * k + 6 > kMaxVertices) throw std::invalid_argument("soltes_b exceeds 64 vertices");
    Graph g = Graph::empty(5 * k + 6);
    int next = 2;
    for (int path = 0; path <= k; ++path) {
        int len = path < k ? 5 : 4;
        int prev = 0;
        for (int i = 0; i < len; ++i) {
            g.add_edge(prev, next);
            prev = next++;
        }
        g.add_edge(prev, 1);
    }
    return g;
}

inline auto join_clique_tree(int l, const Graph& t) -> Graph {
    if (l < 1) throw std::invalid_argument("join_clique_tree needs l >= 1");
    if (!is_tree(t)) throw std::invalid_argument("join_clique_tree needs a tree");
    return join(complete_graph(l), t);
}

// Two end cycles joined by a path so the result has exactly p blocks on
// a + b + p - 3 vertices; a or b equal to 2 means an edge end block.  For
// p = 2 the cycles share one vertex.
inline auto two_cycles_path(int a, int p, int b) -> Graph {
    if (a < 2 || b < 2 || p < 2) throw std::invalid_argument("two_cycles_path needs a,b >= 2, p >= 2");
    int n = a + b + p - 3;
    if (n > kMaxVertices) throw std::invalid_argument("two_cycles_path exceeds 64 vertices");
    Graph g = Graph::empty(n);
    // left cycle on 0..a-1 hinged at 0 (a = 2: edge 0-1)
    for (int i = 0; i + 1 < a; ++i) g.add_edge(i, i + 1);
    if (a >= 3) g.add_edge(0, a - 1);
    // path from 0 through p-3 fresh vertices to the right hinge
    int prev = 0, next = a;
    for (int i = 0; i < p - 3; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    int hinge = prev;  // for p = 2 this is vertex 0 itself
    if (p >= 3) {
        // fresh hinge vertex ends the path and starts the right cycle
        g.add_edge(prev, next);
        hinge = next++;
    }
    // right cycle on hinge plus b-1 fresh vertices
    prev = hinge;
    for (int i = 0; i + 1 < b; ++i) {
        g.add_edge(prev, next);
        prev = next++;
    }
    if (b >= 3) g.add_edge(hinge, prev);
    return g;
}

// Two triangles joined by a bridge, three pendant vertices on each vertex of
// degree two after that; 18 vertices, 19 edges, chromatic number 3.
inline auto coloring_counterexample() -> Graph {
    Graph g = Graph::empty(18);
    // triangles 0,1,5 and 2,3,4 with bridge 1-2; pendant hosts 0,3,4,5
    g.add_edge(0, 1);
    g.add_edge(0, 5);
    g.add_edge(1, 5);
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(2, 4);
    g.add_edge(3, 4);
    int next = 6;
    for (int host : {0, 3, 4, 5})
        for (int i = 0; i < 3; ++i) g.add_edge(host, next++);
    return g;
}

// Maximum-Wiener connected cubic graph; defined for even n >= 10.
inline auto cubic_max(int n) -> Graph {
    if (n < 10 || n % 2 != 0) throw std::invalid_argument("cubic_max needs even n >= 10");
    if (n > kMaxVertices) throw std::invalid_argument("cubic_max exceeds 64 vertices");
    Graph g = Graph::empty(n);
    // cap: K_4 on {base..base+3} with edge base+1,base+2 subdivided by base+4;
    // base+4 carries the chain edge
    auto add_cap = [&](int base) {
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base, base + 3);
        g.add_edge(base + 1, base + 3);
        g.add_edge(base + 2, base + 3);
        g.add_edge(base + 1, base + 4);
        g.add_edge(base + 2, base + 4);
        return base + 4;  // connector
    };
    // diamond: K_4 minus an edge on {base..base+3}; connectors base, base+3
    auto add_diamond = [&](int base) {
        g.add_edge(base, base + 1);
        g.add_edge(base, base + 2);
        g.add_edge(base + 1, base + 2);
        g.add_edge(base + 1, base + 3);
        g.add_edge(base + 2, base + 3);
    };
    int left = add_cap(0);
    int pos = 5;
    if (n % 4 == 2) {
        int t = (n - 10) / 4;
        int prev = left;
        for (int i = 0; i < t; ++i) {
            g.add_edge(prev, pos);
            add_diamond(pos);
            prev = pos + 3;
            pos += 4;
        }
        int right = add_cap(pos);
        g.add_edge(prev, right);
    } else {
        int t = (n - 12) / 4;
        int prev = left;
        for (int i = 0; i < t; ++i) {
            g.add_edge(prev, pos);
            add_diamond(pos);
            prev = pos + 3;
            pos += 4;
        }
        // end block: triangle {pos, pos+1, pos+2} with pos as connector,
        // pos+1 and pos+2 hooked to a final diamond {pos+3..pos+6}
        g.add_edge(prev, pos);
        g.add_edge(pos, pos + 1);
        g.add_edge(pos, pos + 2);
        g.add_edge(pos + 1, pos + 2);
        add_diamond(pos + 3);
        g.add_edge(pos + 1, pos + 3);
        g.add_edge(pos + 2, pos + 6);
    }
    return g;
}

// Name-based dispatch used by command line tools.
inline auto standard_graph(const std::string& name, const std::vector<int>& a) -> Graph {
    auto arity = [&](size_t k) {
        if (a.size() != k)
            throw std::invalid_argument("family " + name + " expects " + std::to_string(k) + " parameter(s)");
    };
    if (name == "path") { arity(1); return path_graph(a[0]); }
    if (name == "cycle") { arity(1); return cycle_graph(a[0]); }
    if (name == "star") { arity(1); return star_graph(a[0]); }
    if (name == "complete") { arity(1); return complete_graph(a[0]); }
    if (name == "complete_bipartite") { arity(2); return complete_bipartite(a[0], a[1]); }
    if (name == "circulant") {
        if (a.size() < 2) throw std::invalid_argument("circulant expects n and at least one jump");
        return circulant(a[0], {a.begin() + 1, a.end()});
    }
    if (name == "petersen") { arity(0); return petersen(); }
    if (name == "heawood") { arity(0); return heawood(); }
    if (name == "q3") { arity(0); return hypercube_q3(); }
    if (name == "broom") { arity(2); return broom(a[0], a[1]); }
    if (name == "double_broom") { arity(3); return double_broom(a[0], a[1], a[2]); }
    if (name == "theta") { arity(3); return theta_graph(a[0], a[1], a[2]); }
    if (name == "dumbbell") { arity(3); return dumbbell(a[0], a[1], a[2]); }
    if (name == "barbell") { arity(5); return barbell(a[0], a[1], a[2], a[3], a[4]); }
    if (name == "clique_with_pendants") { arity(2); return clique_with_pendants(a[0], a[1]); }
    if (name == "diameter4_tree") { arity(1); return diameter4_tree(a[0]); }
    if (name == "diameter4_tree_prime") { arity(1); return diameter4_tree_prime(a[0]); }
    if (name == "h_npq") { arity(3); return h_npq(a[0], a[1], a[2]); }
    if (name == "h_plus") { arity(1); return h_plus(a[0]); }
    if (name == "g_nrs") { arity(3); return g_nrs(a[0], a[1], a[2]); }
    if (name == "cambie_haslegrave") { arity(2); return cambie_haslegrave(a[0], a[1]); }
    if (name == "soltes_b") { arity(1); return soltes_b(a[0]); }
    if (name == "two_cycles_path") { arity(3); return two_cycles_path(a[0], a[1], a[2]); }
    if (name == "coloring_counterexample") { arity(0); return coloring_counterexample(); }
    if (name == "cubic_max") { arity(1); return cubic_max(a[0]); }
    if (name == "grid") { arity(2); return cartesian_product(path_graph(a[0]), path_graph(a[1])); }
    throw std::invalid_argument("unknown family: " + name);
}

}  // namespace wiener
