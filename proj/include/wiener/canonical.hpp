// Exact canonical forms and automorphisms for graphs on up to 16 vertices:
// equitable-partition refinement plus individualization backtracking, with
// orbit pruning from automorphisms discovered along the way.  The canonical
// form is the maximum adjacency encoding over the explored labelings; two
// graphs compare equal iff they are isomorphic.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "graph.hpp"

namespace wiener {

constexpr int kCanonMax = 16;

struct CanonicalForm {
    std::uint8_t n = 0;
    std::array<std::uint64_t, 2> bits{};

    auto operator==(const CanonicalForm&) const -> bool = default;
    auto operator<(const CanonicalForm& o) const -> bool {
        if (n != o.n) return n < o.n;
        if (bits[0] != o.bits[0]) return bits[0] < o.bits[0];
        return bits[1] < o.bits[1];
    }
};

struct CanonicalFormHash {
    auto operator()(const CanonicalForm& f) const -> std::size_t {
        std::uint64_t h = f.bits[0] * 0x9e3779b97f4a7c15ull;
        h ^= f.bits[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        return std::size_t(h ^ (f.n * 0xff51afd7ed558ccdull));
    }
};

using Perm16 = std::array<std::int8_t, kCanonMax>;

struct CanonicalScan {
    CanonicalForm form;
    Perm16 labeling{};                 // vertex -> canonical position
    std::vector<Perm16> generators;    // automorphism generators of the input
    std::array<std::int8_t, kCanonMax> orbit_of{};
    int orbit_count = 0;
};

namespace detail {

struct Partition {
    int n = 0;
    std::array<std::int8_t, kCanonMax> order{};   // position -> vertex
    std::array<std::int8_t, kCanonMax> start{};   // cell index -> first position
    std::array<std::int8_t, kCanonMax> len{};     // cell index -> size
    int cells = 0;

    static auto unit(int n) -> Partition {
        Partition p;
        p.n = n;
        for (int i = 0; i < n; ++i) p.order[i] = std::int8_t(i);
        p.start[0] = 0;
        p.len[0] = std::int8_t(n);
        p.cells = n > 0 ? 1 : 0;
        return p;
    }

    auto discrete() const -> bool { return cells == n; }
};

using Sig = std::array<std::int8_t, kCanonMax + 1>;

inline void refine(const Graph& g, Partition& p) {
    std::array<std::uint64_t, kCanonMax> cell_mask;
    bool changed = true;
    while (changed && p.cells < p.n) {
        changed = false;
        for (int c = 0; c < p.cells; ++c) {
            cell_mask[c] = 0;
            for (int i = 0; i < p.len[c]; ++i)
                cell_mask[c] |= std::uint64_t{1} << p.order[p.start[c] + i];
        }
        Partition next;
        next.n = p.n;
        next.cells = 0;
        int pos = 0;
        for (int c = 0; c < p.cells; ++c) {
            if (p.len[c] == 1) {
                next.start[next.cells] = std::int8_t(pos);
                next.len[next.cells++] = 1;
                next.order[pos++] = p.order[p.start[c]];
                continue;
            }
            std::array<std::pair<Sig, std::int8_t>, kCanonMax> keyed;
            for (int i = 0; i < p.len[c]; ++i) {
                int v = p.order[p.start[c] + i];
                Sig s{};
                for (int d = 0; d < p.cells; ++d)
                    s[d] = std::int8_t(std::popcount(g.adj[v] & cell_mask[d]));
                s[kCanonMax] = 0;
                keyed[i] = {s, std::int8_t(v)};
            }
            std::sort(keyed.begin(), keyed.begin() + p.len[c]);
            for (int i = 0; i < p.len[c];) {
                int j = i;
                while (j < p.len[c] && keyed[j].first == keyed[i].first) ++j;
                next.start[next.cells] = std::int8_t(pos);
                next.len[next.cells++] = std::int8_t(j - i);
                for (int k = i; k < j; ++k) next.order[pos++] = keyed[k].second;
                if (j - i < p.len[c]) changed = true;
                i = j;
            }
        }
        p = next;
    }
}

struct SearchState {
    const Graph* g = nullptr;
    bool have_best = false;
    CanonicalForm best;
    std::array<std::int8_t, kCanonMax> best_order{};  // position -> vertex
    std::vector<Perm16> generators;

    auto encode(const Partition& p) const -> CanonicalForm {
        CanonicalForm f;
        f.n = std::uint8_t(p.n);
        int bit = 0;
        for (int j = 1; j < p.n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (g->has_edge(p.order[i], p.order[j]))
                    f.bits[bit >> 6] |= std::uint64_t{1} << (bit & 63);
        return f;
    }

    void leaf(const Partition& p) {
        CanonicalForm f = encode(p);
        if (!have_best || best < f) {
            // generators found under an older best stay valid: the encoding
            // match that produced them certifies an automorphism outright
            best = f;
            for (int i = 0; i < p.n; ++i) best_order[i] = p.order[i];
            have_best = true;
            return;
        }
        if (f == best) {
            Perm16 sigma{};
            std::array<std::int8_t, kCanonMax> lab1{};
            for (int i = 0; i < p.n; ++i) lab1[p.order[i]] = std::int8_t(i);
            for (int v = 0; v < p.n; ++v) sigma[v] = best_order[lab1[v]];
            bool identity = true;
            for (int v = 0; v < p.n; ++v)
                if (sigma[v] != v) { identity = false; break; }
            if (!identity) generators.push_back(sigma);
        }
    }

    void search(Partition p, std::uint64_t fixed) {
        refine(*g, p);
        if (p.discrete()) {
            leaf(p);
            return;
        }
        int target = -1;
        for (int c = 0; c < p.cells; ++c)
            if (p.len[c] > 1 && (target < 0 || p.len[c] < p.len[target])) target = c;

        std::array<std::int8_t, kCanonMax> uf;
        std::uint64_t tried = 0;
        for (int k = 0; k < p.len[target]; ++k) {
            int v = p.order[p.start[target] + k];
            if (tried) {
                // prune vertices equivalent to an explored sibling under the
                // subgroup fixing every individualized vertex so far
                for (int i = 0; i < p.n; ++i) uf[i] = std::int8_t(i);
                auto find = [&](int x) {
                    while (uf[x] != x) x = uf[x] = uf[uf[x]];
                    return x;
                };
                for (const auto& s : generators) {
                    bool ok = true;
                    for (std::uint64_t m = fixed; m; m &= m - 1) {
                        int f = std::countr_zero(m);
                        if (s[f] != f) { ok = false; break; }
                    }
                    if (!ok) continue;
                    for (int x = 0; x < p.n; ++x) {
                        int a = find(x), b = find(s[x]);
                        if (a != b) uf[a] = std::int8_t(b);
                    }
                }
                bool skip = false;
                for (std::uint64_t m = tried; m; m &= m - 1)
                    if (find(std::countr_zero(m)) == find(v)) { skip = true; break; }
                if (skip) continue;
            }
            tried |= std::uint64_t{1} << v;

            Partition child = p;
            // split target into [v | rest], keeping rest order
            int base = child.start[target];
            for (int c = child.cells; c > target + 1; --c) {
                child.start[c] = child.start[c - 1];
                child.len[c] = child.len[c - 1];
            }
            ++child.cells;
            std::array<std::int8_t, kCanonMax> rest{};
            int r = 0;
            for (int i = 0; i < p.len[target]; ++i)
                if (p.order[base + i] != v) rest[r++] = p.order[base + i];
            child.order[base] = std::int8_t(v);
            for (int i = 0; i < r; ++i) child.order[base + 1 + i] = rest[i];
            child.start[target] = std::int8_t(base);
            child.len[target] = 1;
            child.start[target + 1] = std::int8_t(base + 1);
            child.len[target + 1] = std::int8_t(r);

            search(child, fixed | (std::uint64_t{1} << v));
        }
    }
};

}  // namespace detail

inline auto canonical_scan(const Graph& g) -> CanonicalScan {
    if (g.n > kCanonMax)
        throw std::invalid_argument("canonical form limited to n <= 16");
    detail::SearchState st;
    st.g = &g;
    if (g.n == 0) {
        CanonicalScan out;
        out.form.n = 0;
        return out;
    }
    st.search(detail::Partition::unit(g.n), 0);

    CanonicalScan out;
    out.form = st.best;
    for (int i = 0; i < g.n; ++i) out.labeling[st.best_order[i]] = std::int8_t(i);
    out.generators = std::move(st.generators);

    std::array<std::int8_t, kCanonMax> uf;
    for (int i = 0; i < g.n; ++i) uf[i] = std::int8_t(i);
    auto find = [&](int x) {
        while (uf[x] != x) x = uf[x] = uf[uf[x]];
        return x;
    };
    for (const auto& s : out.generators)
        for (int v = 0; v < g.n; ++v) {
            int a = find(v), b = find(s[v]);
            if (a != b) uf[a] = std::int8_t(b);
        }
    std::array<std::int8_t, kCanonMax> root_id{};
    for (int i = 0; i < kCanonMax; ++i) root_id[i] = -1;
    out.orbit_count = 0;
    for (int v = 0; v < g.n; ++v) {
        int r = find(v);
        if (root_id[r] < 0) root_id[r] = std::int8_t(out.orbit_count++);
        out.orbit_of[v] = root_id[r];
    }
    return out;
}

inline auto canonical_form(const Graph& g) -> CanonicalForm { return canonical_scan(g).form; }

struct AutomorphismOrbits {
    std::vector<int> orbit_of;
    int orbit_count = 0;
    bool vertex_transitive = false;
};

inline auto automorphism_orbits(const Graph& g) -> AutomorphismOrbits {
    auto scan = canonical_scan(g);
    AutomorphismOrbits out;
    out.orbit_of.assign(g.n, 0);
    for (int v = 0; v < g.n; ++v) out.orbit_of[v] = scan.orbit_of[v];
    out.orbit_count = scan.orbit_count;
    out.vertex_transitive = g.n <= 1 || scan.orbit_count == 1;
    return out;
}

inline auto is_vertex_transitive(const Graph& g) -> bool {
    return automorphism_orbits(g).vertex_transitive;
}

}  // namespace wiener
