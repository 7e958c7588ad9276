#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "wiener/families.hpp"
#include "wiener/varindex.hpp"

using namespace wiener;

TEST_CASE("edge split counts") {
    auto c4 = edge_split_counts(cycle_graph(4));
    REQUIRE(c4.size() == 4);
    for (auto [nu, nv] : c4) {
        CHECK(nu == 2);
        CHECK(nv == 2);
    }

    for (auto [nu, nv] : edge_split_counts(complete_graph(6))) {
        CHECK(nu == 1);
        CHECK(nv == 1);
    }

    std::mt19937_64 rng(31);
    for (int rep = 0; rep < 8; ++rep) {
        Graph t = oracle::random_tree(10, rng);
        auto splits = edge_split_counts(t);
        auto edges = t.edges();
        for (size_t e = 0; e < edges.size(); ++e) {
            CHECK(splits[e].first + splits[e].second == t.n);
            Graph cut = t;
            cut.remove_edge(edges[e].first, edges[e].second);
            CHECK(splits[e].first == std::popcount(reachable_set(cut, uint64_t{1} << edges[e].first)));
        }
    }

    Graph split = Graph::empty(3);
    split.add_edge(0, 1);
    CHECK_THROWS_WITH(edge_split_counts(split), "edge splits undefined on disconnected graph");
}

TEST_CASE("szeged values") {
    CHECK(szeged(complete_graph(3)) == 3);
    CHECK(szeged(complete_graph(3)) == wiener_index(complete_graph(3)));
    CHECK(szeged(cycle_graph(4)) == 16);
    CHECK(wiener_index(cycle_graph(4)) == 8);
    CHECK(szeged(cycle_graph(5)) == 20);
    CHECK(wiener_index(cycle_graph(5)) == 15);
}

TEST_CASE("variable indices at integer exponents") {
    std::mt19937_64 rng(8);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_connected_graph(5 + rep % 6, 0.4, rng);
        long long pairs = static_cast<long long>(g.n) * (g.n - 1) / 2;
        CHECK(variable_wiener(g, 0.0) == Catch::Approx(static_cast<double>(pairs)));
        CHECK(variable_szeged(g, 0.0) == Catch::Approx(static_cast<double>(g.edge_count())));
        CHECK(variable_wiener(g, 1.0) == Catch::Approx(static_cast<double>(wiener_index(g))));
        CHECK(variable_szeged(g, 1.0) == Catch::Approx(static_cast<double>(szeged(g))));
    }
}

TEST_CASE("szeged dominates wiener at one") {
    for (int n = 2; n <= 6; ++n)
        oracle::labeled_connected_classes(n, [&](const Graph& g) { CHECK(szeged(g) >= wiener_index(g)); });
    std::mt19937_64 rng(19);
    for (int rep = 0; rep < 10; ++rep) {
        Graph g = oracle::random_connected_graph(10, 0.3, rng);
        CHECK(szeged(g) >= wiener_index(g));
    }
}

TEST_CASE("strict inequalities away from one") {
    for (int n = 3; n <= 6; ++n)
        oracle::labeled_connected_classes(n, [&](const Graph& g) {
            if (g.edge_count() == static_cast<long long>(g.n) * (g.n - 1) / 2) return;
            for (double a : {1.5, 2.0, 3.0}) CHECK(variable_szeged(g, a) > variable_wiener(g, a));
            for (double a : {-1.0, -0.5}) CHECK(variable_szeged(g, a) < variable_wiener(g, a));
        });
}

TEST_CASE("bipartite comparison above one") {
    CHECK(variable_szeged(complete_graph(2), 2.0) == Catch::Approx(variable_wiener(complete_graph(2), 2.0)));
    for (int n = 3; n <= 6; ++n)
        oracle::labeled_connected_classes(n, [&](const Graph& g) {
            if (!is_bipartite(g)) return;
            CHECK(variable_szeged(g, 2.0) > variable_wiener(g, 2.0));
        });
}

TEST_CASE("critical exponent scan") {
    SECTION("complete inputs are degenerate") {
        for (int n : {1, 2, 4, 7}) {
            auto scan = critical_exponents(complete_graph(n));
            CHECK(scan.degenerate);
            CHECK(scan.roots.empty());
        }
    }
    SECTION("trees cross exactly once, at one") {
        std::mt19937_64 rng(23);
        std::vector<Graph> trees{path_graph(3), path_graph(8), star_graph(7), broom(9, 4)};
        for (int rep = 0; rep < 4; ++rep) trees.push_back(oracle::random_tree(6 + rep * 3, rng));
        for (const Graph& t : trees) {
            auto scan = critical_exponents(t);
            REQUIRE(scan.roots.size() == 1);
            CHECK(scan.roots[0] == Catch::Approx(1.0).margin(1e-6));
            CHECK(scan.roots[0] > 0.0);
            CHECK(scan.roots[0] <= 1.0 + 1e-6);
        }
    }
    SECTION("five cycle root at the golden exponent") {
        auto scan = critical_exponents(cycle_graph(5));
        REQUIRE(scan.roots.size() == 1);
        CHECK(scan.roots[0] == Catch::Approx(std::log2((1.0 + std::sqrt(5.0)) / 2.0)).margin(1e-6));
    }
    SECTION("guards") {
        CHECK_THROWS_WITH(critical_exponents(path_graph(4), 2.0, 1.0, 100), "bad scan range");
        Graph split = Graph::empty(3);
        split.add_edge(0, 1);
        CHECK_THROWS(critical_exponents(split));
    }
}

TEST_CASE("equality classification") {
    CHECK(classify_equality(path_graph(6)));
    CHECK(classify_equality(complete_graph(5)));
    CHECK(classify_equality(dumbbell(3, 3, 1)));
    Graph pendant = complete_graph(4);
    pendant.n = 5;
    pendant.add_edge(3, 4);
    CHECK(classify_equality(pendant));
    CHECK_FALSE(classify_equality(cycle_graph(5)));
    CHECK_FALSE(classify_equality(petersen()));
    for (int n = 2; n <= 6; ++n)
        oracle::labeled_connected_classes(n, [&](const Graph& g) { CHECK_NOTHROW(classify_equality(g)); });
}

TEST_CASE("apex extremal formulas") {
    std::mt19937_64 rng(12);
    for (int l = 1; l <= 3; ++l)
        for (int tn = 2; tn <= 6; ++tn)
            for (int rep = 0; rep < 4; ++rep) {
                Graph t = oracle::random_tree(tn, rng);
                Graph g = join_clique_tree(l, t);
                int n = l + tn;
                CHECK(static_cast<double>(wiener_index(g)) ==
                      Catch::Approx(min_apex_variable_wiener(n, l, 1.0)));
                for (double a : {2.0, 0.5, -1.0})
                    CHECK(variable_wiener(g, a) == Catch::Approx(min_apex_variable_wiener(n, l, a)));
            }

    for (int n = 5; n <= 12; ++n) {
        Graph g = dumbbell(3, 1, n - 4);
        REQUIRE(g.n == n);
        CHECK(static_cast<double>(wiener_index(g)) == Catch::Approx(max_apex_variable_wiener(n, 1.0)));
        for (double a : {2.0, -0.5}) CHECK(variable_wiener(g, a) == Catch::Approx(max_apex_variable_wiener(n, a)));
    }

    CHECK_THROWS_WITH(min_apex_variable_wiener(2, 1, 1.0), "apex formula needs l >= 1, n >= l + 2");
    CHECK_THROWS_WITH(max_apex_variable_wiener(4, 1.0), "apex dumbbell formula needs n >= 5");
}

TEST_CASE("family gap formula and the three-root witness") {
    for (auto [k, l] : {std::pair{8, 3}, {12, 5}, {20, 8}}) {
        Graph g = cambie_haslegrave(k, l);
        for (double a : {0.4, 1.0, 2.2})
            CHECK(cambie_haslegrave_gap(k, l, a) == Catch::Approx(szeged_wiener_gap(g, a)).epsilon(1e-9));
    }

    CHECK(cambie_haslegrave_gap(600, 91, 0.30) < 0);
    CHECK(cambie_haslegrave_gap(600, 91, 0.45) > 0);
    CHECK(cambie_haslegrave_gap(600, 91, 0.70) < 0);
    CHECK(cambie_haslegrave_gap(600, 91, 0.95) > 0);

    auto small = critical_exponents(cambie_haslegrave(8, 3));
    CHECK(small.roots.size() == 1);

    CHECK_THROWS_WITH(cambie_haslegrave_gap(4, 1, 1.0), "cambie_haslegrave needs k >= 5, l >= 1");
}
