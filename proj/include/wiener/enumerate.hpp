// Isomorphism-free generation of connected graph classes.  Graphs grow one
// vertex at a time: a child survives iff the vertex just added lies in the
// automorphism orbit of a canonically chosen non-cut vertex, and candidate
// neighborhoods are taken one per orbit of the parent's automorphism group,
// so the stream is duplicate-free without any global store.  Cheap invariant
// layers (degree, transmission, neighbor profile) settle most parent tests
// before the full canonical scan is consulted.
#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blocks.hpp"
#include "canonical.hpp"
#include "graph.hpp"
#include "soltes.hpp"

namespace wiener {

struct ClassFilter {
    std::optional<int> max_degree;
    std::optional<int> regular;
    std::optional<int> min_connectivity;
    std::optional<int> diameter;
    std::optional<int> radius;
    std::optional<int> block_count;
    std::optional<int> max_circumference;
    bool trees_only = false;

    void validate() const {
        auto nonneg = [](const std::optional<int>& f, const char* what) {
            if (f && *f < 0)
                throw std::invalid_argument(std::string("filter: ") + what +
                                            " must be nonnegative");
        };
        nonneg(max_degree, "max degree");
        nonneg(regular, "regular degree");
        nonneg(min_connectivity, "connectivity");
        nonneg(diameter, "diameter");
        nonneg(radius, "radius");
        nonneg(max_circumference, "circumference bound");
        if (block_count && *block_count < 1)
            throw std::invalid_argument("filter: block count must be positive");
        if (regular && max_degree && *regular > *max_degree)
            throw std::invalid_argument("filter: regular degree exceeds max degree");
        if (regular && trees_only && *regular > 1)
            throw std::invalid_argument("filter: no tree is regular of degree above 1");
        if (trees_only && min_connectivity && *min_connectivity > 1)
            throw std::invalid_argument("filter: trees are at most 1-connected");
        if (diameter && radius && (*diameter < *radius || *diameter > 2 * *radius))
            throw std::invalid_argument("filter: diameter must lie in [r, 2r]");
    }
};

struct ShardSpec {
    int index = 0;
    int count = 1;
};

inline auto vertex_connectivity_at_least(const Graph& g, int need) -> bool {
    if (need <= 0) return true;
    if (!is_connected(g)) return false;
    if (need > g.n - 1) return false;
    if (g.edge_count() == g.n * (g.n - 1) / 2) return true;
    std::uint64_t all = vertex_mask(g.n);
    for (std::uint64_t drop = 1; drop < all; ++drop) {
        if (std::popcount(drop) >= need) continue;
        if (!is_connected(delete_vertices(g, drop))) return false;
    }
    return true;
}

namespace detail {

inline auto noncut_mask(const Graph& g) -> std::uint64_t {
    std::array<std::int8_t, kCanonMax> depth{};
    std::array<std::int8_t, kCanonMax> low{};
    depth.fill(-1);
    std::uint64_t cut = 0;
    auto dfs = [&](auto&& self, int v, int parent) -> void {
        low[v] = depth[v];
        int children = 0;
        for (std::uint64_t m = g.adj[v]; m; m &= m - 1) {
            int u = std::countr_zero(m);
            if (depth[u] < 0) {
                depth[u] = std::int8_t(depth[v] + 1);
                ++children;
                self(self, u, v);
                low[v] = std::min(low[v], low[u]);
                if (parent >= 0 && low[u] >= depth[v]) cut |= std::uint64_t{1} << v;
            } else if (u != parent) {
                low[v] = std::min(low[v], depth[u]);
            }
        }
        if (parent < 0 && children > 1) cut |= std::uint64_t{1} << v;
    };
    depth[0] = 0;
    dfs(dfs, 0, -1);
    return vertex_mask(g.n) & ~cut;
}

struct Generator {
    int target = 0;
    const ClassFilter* filter = nullptr;
    const std::function<void(const Graph&)>* visit = nullptr;
    int shard_index = 0;
    int shard_count = 1;
    int gate_level = 1;
    std::uint64_t gate_counter = 0;
    std::uint64_t emitted = 0;
    int degree_cap = kMaxVertices;
    std::optional<int> regular;
    bool singles_only = false;

    void run() {
        const ClassFilter& f = *filter;
        degree_cap = f.max_degree ? *f.max_degree : kMaxVertices;
        if (f.regular) degree_cap = std::min(degree_cap, *f.regular);
        regular = f.regular;
        singles_only = f.trees_only;
        gate_level = std::max(1, target - 1);
        expand(Graph::empty(1));
    }

    auto admit(const Graph& g) const -> bool {
        const ClassFilter& f = *filter;
        if (f.max_degree && g.max_degree() > *f.max_degree) return false;
        if (f.regular)
            for (int v = 0; v < g.n; ++v)
                if (g.degree(v) != *f.regular) return false;
        if (f.trees_only && !is_tree(g)) return false;
        if (f.block_count && blocks(g).block_count() != *f.block_count) return false;
        if (f.min_connectivity && !vertex_connectivity_at_least(g, *f.min_connectivity))
            return false;
        if (f.diameter || f.radius) {
            auto ecc = eccentricity_profile(g);
            if (f.diameter && ecc.diameter != *f.diameter) return false;
            if (f.radius && ecc.radius != *f.radius) return false;
        }
        if (f.max_circumference && circumference(g) > *f.max_circumference) return false;
        return true;
    }

    // Parent test: the new vertex w = n-1 must be automorphic to the chosen
    // deletion vertex.  The candidate set starts at the non-cut vertices and
    // is narrowed by invariant keys; the canonical scan only breaks real ties.
    auto accept(const Graph& g) const -> bool {
        int n = g.n;
        int w = n - 1;
        std::uint64_t cand = noncut_mask(g);
        int dmin = kMaxVertices;
        for (std::uint64_t m = cand; m; m &= m - 1)
            dmin = std::min(dmin, g.degree(std::countr_zero(m)));
        if (g.degree(w) > dmin) return false;
        std::uint64_t next = 0;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (g.degree(v) == dmin) next |= std::uint64_t{1} << v;
        }
        cand = next;
        if (cand == std::uint64_t{1} << w) return true;

        std::array<std::array<std::uint8_t, kCanonMax>, kCanonMax> dist;
        std::array<int, kCanonMax> trans{};
        for (int v = 0; v < n; ++v) {
            bfs_distances(g, v, dist[v].data());
            int s = 0;
            for (int u = 0; u < n; ++u) s += dist[v][u];
            trans[v] = s;
        }
        int tmin = INT32_MAX;
        for (std::uint64_t m = cand; m; m &= m - 1)
            tmin = std::min(tmin, trans[std::countr_zero(m)]);
        if (trans[w] > tmin) return false;
        next = 0;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (trans[v] == tmin) next |= std::uint64_t{1} << v;
        }
        cand = next;
        if (cand == std::uint64_t{1} << w) return true;

        auto profile = [&](int v) -> std::uint64_t {
            std::array<std::uint8_t, kCanonMax> hist{};
            for (int u = 0; u < n; ++u) ++hist[dist[v][u]];
            std::array<std::uint16_t, kCanonMax> nb{};
            int c = 0;
            for (std::uint64_t m = g.adj[v]; m; m &= m - 1) {
                int u = std::countr_zero(m);
                nb[c++] = std::uint16_t(g.degree(u) * 256 + trans[u]);
            }
            std::sort(nb.begin(), nb.begin() + c);
            std::uint64_t h = 0x9e3779b97f4a7c15ull;
            for (int d = 0; d < kCanonMax; ++d) h = h * 0x100000001b3ull ^ hist[d];
            for (int i = 0; i < c; ++i) h = h * 0x100000001b3ull ^ nb[i];
            return h;
        };
        std::array<std::uint64_t, kCanonMax> key{};
        std::uint64_t kmin = ~std::uint64_t{0};
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            key[v] = profile(v);
            kmin = std::min(kmin, key[v]);
        }
        if (key[w] > kmin) return false;
        next = 0;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (key[v] == kmin) next |= std::uint64_t{1} << v;
        }
        cand = next;
        if (cand == std::uint64_t{1} << w) return true;

        auto scan = canonical_scan(g);
        int vstar = -1;
        int best_pos = kCanonMax;
        for (std::uint64_t m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (scan.labeling[v] < best_pos) {
                best_pos = scan.labeling[v];
                vstar = v;
            }
        }
        return scan.orbit_of[w] == scan.orbit_of[vstar];
    }

    void try_child(const Graph& g, std::uint64_t nb) {
        Graph child = g;
        int q = g.n;
        child.n = q + 1;
        child.adj[q] = nb;
        for (std::uint64_t m = nb; m; m &= m - 1)
            child.adj[std::countr_zero(m)] |= std::uint64_t{1} << q;
        if (accept(child)) expand(child);
    }

    void expand(const Graph& g) {
        if (shard_count > 1 && g.n == gate_level) {
            if (gate_counter++ % std::uint64_t(shard_count) != std::uint64_t(shard_index))
                return;
        }
        if (g.n == target) {
            if (admit(g)) {
                ++emitted;
                (*visit)(g);
            }
            return;
        }
        int q = g.n;
        int remaining = target - q;
        if (regular) {
            int deficit = 0;
            for (int v = 0; v < q; ++v) {
                int d = *regular - g.degree(v);
                if (d > remaining) return;
                deficit += d;
            }
            if (deficit > remaining * *regular) return;
            if (remaining == 1) {
                std::uint64_t forced = 0;
                for (int v = 0; v < q; ++v)
                    if (g.degree(v) == *regular - 1) forced |= std::uint64_t{1} << v;
                if (forced != 0 && std::popcount(forced) == *regular) try_child(g, forced);
                return;
            }
        }

        std::uint64_t full = 0;
        if (degree_cap < kMaxVertices)
            for (int v = 0; v < q; ++v)
                if (g.degree(v) >= degree_cap) full |= std::uint64_t{1} << v;

        auto scan = canonical_scan(g);

        if (singles_only) {
            std::uint32_t done_orbits = 0;
            for (int v = 0; v < q; ++v) {
                if (full >> v & 1) continue;
                int o = scan.orbit_of[v];
                if (done_orbits >> o & 1) continue;
                done_orbits |= std::uint32_t{1} << o;
                try_child(g, std::uint64_t{1} << v);
            }
            return;
        }

        int size_min = 1;
        int size_max = std::min(q, degree_cap);
        if (regular) size_min = std::max(1, *regular - (remaining - 1));

        const std::uint64_t limit = std::uint64_t{1} << q;
        std::vector<std::int32_t> uf;
        std::vector<std::uint8_t> seen;
        if (!scan.generators.empty()) {
            uf.resize(limit);
            seen.assign(limit, 0);
            for (std::uint64_t m = 0; m < limit; ++m) uf[m] = std::int32_t(m);
            auto find = [&](std::uint64_t x) {
                while (uf[x] != std::int32_t(x)) x = uf[x] = uf[uf[x]];
                return x;
            };
            std::vector<std::uint64_t> image(limit);
            for (const auto& s : scan.generators) {
                image[0] = 0;
                for (std::uint64_t m = 1; m < limit; ++m)
                    image[m] = image[m & (m - 1)] |
                               std::uint64_t{1} << s[std::countr_zero(m)];
                for (std::uint64_t m = 1; m < limit; ++m) {
                    std::uint64_t a = find(m), b = find(image[m]);
                    if (a != b) uf[a] = std::int32_t(b);
                }
            }
        }
        for (std::uint64_t nb = 1; nb < limit; ++nb) {
            int size = std::popcount(nb);
            if (size < size_min || size > size_max) continue;
            if (nb & full) continue;
            if (!uf.empty()) {
                std::uint64_t r = nb;
                while (uf[r] != std::int32_t(r)) r = uf[r] = uf[uf[r]];
                if (seen[r]) continue;
                seen[r] = 1;
            }
            try_child(g, nb);
        }
    }
};

}  // namespace detail

inline auto connected_graphs(int n, const ClassFilter& filter,
                             const std::function<void(const Graph&)>& visit,
                             ShardSpec shard = {}) -> std::uint64_t {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > kCanonMax) throw std::invalid_argument("enumeration limited to n <= 16");
    filter.validate();
    if (shard.count < 1 || shard.index < 0 || shard.index >= shard.count)
        throw std::invalid_argument("bad shard specification");
    bool degree_bounded = filter.max_degree || filter.regular || filter.trees_only;
    if (!degree_bounded && n > 10)
        throw std::invalid_argument("unfiltered enumeration limited to n <= 10");
    if (!filter.trees_only && n > 14)
        throw std::invalid_argument("degree-filtered enumeration limited to n <= 14");
    detail::Generator gen;
    gen.target = n;
    gen.filter = &filter;
    gen.visit = &visit;
    gen.shard_index = shard.index;
    gen.shard_count = shard.count;
    gen.run();
    return gen.emitted;
}

inline auto trees(int n, const std::function<void(const Graph&)>& visit,
                  ShardSpec shard = {}) -> std::uint64_t {
    if (n > kCanonMax) throw std::invalid_argument("tree enumeration limited to n <= 16");
    ClassFilter f;
    f.trees_only = true;
    return connected_graphs(n, f, visit, shard);
}

inline auto regular_graphs(int n, int k, const std::function<void(const Graph&)>& visit,
                           ShardSpec shard = {}) -> std::uint64_t {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (k < 0 || k > std::max(0, n - 1))
        throw std::invalid_argument("regular degree out of range");
    if (n % 2 == 1 && k % 2 == 1)
        throw std::invalid_argument("regular graphs need an even degree sum");
    int cap = k <= 3 ? 14 : (k == 4 ? 11 : 10);
    if (n > cap)
        throw std::invalid_argument("regular enumeration budget exceeded at degree " +
                                    std::to_string(k));
    ClassFilter f;
    f.regular = k;
    return connected_graphs(n, f, visit, shard);
}

inline auto blocks_class(int n, int p, const std::function<void(const Graph&)>& visit,
                         ShardSpec shard = {}) -> std::uint64_t {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    if (n > 9) throw std::invalid_argument("block enumeration limited to n <= 9");
    if (p < 1 || p > std::max(1, n - 1))
        throw std::invalid_argument("block count out of range");
    ClassFilter f;
    f.block_count = p;
    return connected_graphs(n, f, visit, shard);
}

using GraphStream = std::function<std::uint64_t(const std::function<void(const Graph&)>&)>;

inline auto connected_stream(int n, ClassFilter filter = {}, ShardSpec shard = {})
    -> GraphStream {
    return [n, filter, shard](const std::function<void(const Graph&)>& visit) {
        return connected_graphs(n, filter, visit, shard);
    };
}

inline auto tree_stream(int n, ShardSpec shard = {}) -> GraphStream {
    return [n, shard](const std::function<void(const Graph&)>& visit) {
        return trees(n, visit, shard);
    };
}

inline auto regular_stream(int n, int k, ShardSpec shard = {}) -> GraphStream {
    return [n, k, shard](const std::function<void(const Graph&)>& visit) {
        return regular_graphs(n, k, visit, shard);
    };
}

struct SearchRecord {
    std::string objective;
    std::string direction;
    long long best = 0;
    std::vector<CanonicalForm> attaining;
    std::uint64_t visited = 0;
};

inline auto extremal_search(const GraphStream& stream, const std::string& objective_name,
                            const std::function<long long(const Graph&)>& objective,
                            const std::string& direction) -> SearchRecord {
    if (direction != "min" && direction != "max")
        throw std::invalid_argument("direction must be min or max");
    bool minimize = direction == "min";
    SearchRecord rec;
    rec.objective = objective_name;
    rec.direction = direction;
    bool have = false;
    stream([&](const Graph& g) {
        ++rec.visited;
        long long value = objective(g);
        if (!have || (minimize ? value < rec.best : value > rec.best)) {
            rec.best = value;
            rec.attaining.clear();
            have = true;
        }
        if (value == rec.best) rec.attaining.push_back(canonical_form(g));
    });
    if (!have) throw std::invalid_argument("extremal search over an empty stream");
    std::sort(rec.attaining.begin(), rec.attaining.end());
    return rec;
}

inline auto form_to_graph(const CanonicalForm& f) -> Graph {
    Graph g = Graph::empty(f.n);
    int bit = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (f.bits[bit >> 6] >> (bit & 63) & 1) g.add_edge(i, j);
    return g;
}

}  // namespace wiener
