#include <catch2/catch_amalgamated.hpp>

#include <unordered_set>

#include "oracle.hpp"
#include "wiener/canonical.hpp"
#include "wiener/graph.hpp"

using namespace wiener;

namespace {

auto path_n(int n) -> Graph {
    Graph g = Graph::empty(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

auto cycle_n(int n) -> Graph {
    Graph g = path_n(n);
    g.add_edge(0, n - 1);
    return g;
}

auto complete_n(int n) -> Graph {
    Graph g = Graph::empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("canonical form equal iff isomorphic") {
    std::mt19937_64 rng(424242);
    for (int n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 30; ++rep) {
            Graph a = oracle::random_connected_graph(n, 0.4, rng);
            Graph b = oracle::random_connected_graph(n, 0.4, rng);
            bool iso = oracle::isomorphic(a, b);
            bool canon_eq = canonical_form(a) == canonical_form(b);
            REQUIRE(iso == canon_eq);
        }
    }
}

TEST_CASE("canonical form invariant under relabeling") {
    std::mt19937_64 rng(17);
    for (int n = 2; n <= 12; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            Graph g = oracle::random_connected_graph(n, 0.35, rng);
            auto f = canonical_form(g);
            std::vector<int> p(n);
            std::iota(p.begin(), p.end(), 0);
            std::shuffle(p.begin(), p.end(), rng);
            int perm[kMaxVertices];
            for (int v = 0; v < n; ++v) perm[v] = p[v];
            REQUIRE(canonical_form(permute(g, perm)) == f);
        }
    }
}

TEST_CASE("canonical form handles highly symmetric graphs") {
    CHECK(canonical_form(complete_n(10)) == canonical_form(complete_n(10)));
    // K_5 relabeled arbitrarily stays K_5
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 5; ++rep) {
        std::vector<int> p(12);
        std::iota(p.begin(), p.end(), 0);
        std::shuffle(p.begin(), p.end(), rng);
        int perm[kMaxVertices];
        for (int v = 0; v < 12; ++v) perm[v] = p[v];
        REQUIRE(canonical_form(permute(cycle_n(12), perm)) == canonical_form(cycle_n(12)));
    }
}

TEST_CASE("automorphism orbits match brute force") {
    std::mt19937_64 rng(88);
    for (int n = 2; n <= 7; ++n) {
        for (int rep = 0; rep < 20; ++rep) {
            Graph g = oracle::random_connected_graph(n, 0.4, rng);
            auto fast = automorphism_orbits(g);
            auto autos = oracle::all_automorphisms(g);
            // brute-force orbits via union-find over all automorphisms
            std::vector<int> uf(n);
            std::iota(uf.begin(), uf.end(), 0);
            std::function<int(int)> find = [&](int x) {
                while (uf[x] != x) x = uf[x] = uf[uf[x]];
                return x;
            };
            for (const auto& a : autos)
                for (int v = 0; v < n; ++v) {
                    int r1 = find(v), r2 = find(a[v]);
                    if (r1 != r2) uf[r1] = r2;
                }
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v)
                    REQUIRE((fast.orbit_of[u] == fast.orbit_of[v]) == (find(u) == find(v)));
        }
    }
}

TEST_CASE("vertex transitivity") {
    CHECK(is_vertex_transitive(cycle_n(9)));
    CHECK(is_vertex_transitive(complete_n(6)));
    CHECK(!is_vertex_transitive(path_n(4)));
    auto orb = automorphism_orbits(path_n(5));
    CHECK(orb.orbit_count == 3);
}

TEST_CASE("canonical form guard") {
    CHECK_THROWS_AS(canonical_form(Graph::empty(17)), std::invalid_argument);
}

TEST_CASE("distinct small graphs get distinct forms") {
    // all connected graphs on 4 vertices: 6 classes
    std::unordered_set<CanonicalForm, CanonicalFormHash> forms;
    oracle::labeled_connected_classes(4, [&](const Graph& g) { forms.insert(canonical_form(g)); });
    CHECK(forms.size() == 6);
}
