#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "oracle.hpp"
#include "wiener/families.hpp"
#include "wiener/soltes.hpp"

using namespace wiener;

TEST_CASE("eleven cycle stands alone") {
    auto c11 = soltes_profile(cycle_graph(11));
    CHECK(c11.is_soltes_graph);
    CHECK(c11.soltes_count == 11);
    CHECK(c11.proportion_num == 1);
    CHECK(c11.proportion_den == 1);
    for (int v = 0; v < 11; ++v) {
        REQUIRE(c11.delta[v].has_value());
        CHECK(*c11.delta[v] == 0);
    }
    CHECK(z_level_vertices(cycle_graph(11), 0) == (std::uint64_t{1} << 11) - 1);
    CHECK(z_level_vertices(cycle_graph(11), 1) == 0);

    for (int n = 3; n <= 20; ++n) {
        if (n == 11) continue;
        CHECK_FALSE(soltes_profile(cycle_graph(n)).is_soltes_graph);
    }
}

TEST_CASE("complete graphs sit at one level") {
    for (int n : {4, 5, 7}) {
        auto profile = soltes_profile(complete_graph(n));
        CHECK(profile.soltes_count == 0);
        for (int v = 0; v < n; ++v) {
            REQUIRE(profile.delta[v].has_value());
            CHECK(*profile.delta[v] == n - 1);
        }
        CHECK(z_level_vertices(complete_graph(n), n - 1) == (std::uint64_t{1} << n) - 1);
    }
    CHECK(delta_for_set(complete_graph(5), std::uint64_t{1} << 2) == 4);
}

TEST_CASE("pendants and cut vertices") {
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 8; ++rep) {
        Graph t = oracle::random_tree(9, rng);
        auto profile = soltes_profile(t);
        for (int v = 0; v < t.n; ++v) {
            if (t.degree(v) == 1) {
                REQUIRE(profile.delta[v].has_value());
                CHECK(*profile.delta[v] > 0);
            } else {
                CHECK_FALSE(profile.delta[v].has_value());
            }
        }
        CHECK_FALSE(profile.is_soltes_graph);
    }
}

TEST_CASE("set removals") {
    CHECK(delta_for_set(cycle_graph(11), 0) == 0);
    CHECK(delta_for_set(cycle_graph(11), std::uint64_t{1} << 4) == 0);
    CHECK_THROWS_WITH(delta_for_set(path_graph(5), std::uint64_t{1} << 2), "undefined removal");
    CHECK_THROWS_WITH(delta_for_set(path_graph(3), 0b111), "undefined removal");
    CHECK(delta_for_set(cycle_graph(6), 0b11) == wiener_index(cycle_graph(6)) - wiener_index(path_graph(4)));
}

TEST_CASE("hub family proportions") {
    for (int k : {2, 3}) {
        Graph b = soltes_b(k);
        auto profile = soltes_profile(b);
        CHECK(profile.soltes_count == 2 * k);
        CHECK(profile.n == 5 * k + 6);
        int d = std::gcd(2 * k, 5 * k + 6);
        CHECK(profile.proportion_num == 2 * k / d);
        CHECK(profile.proportion_den == (5 * k + 6) / d);
        CHECK_FALSE(profile.is_soltes_graph);
    }
}

TEST_CASE("minimum degree guard") {
    auto k6 = min_degree_guard_check(complete_graph(6));
    CHECK(k6.applies);
    CHECK_FALSE(k6.violated);

    auto c5 = min_degree_guard_check(cycle_graph(5));
    CHECK_FALSE(c5.applies);

    auto c4 = min_degree_guard_check(cycle_graph(4));
    CHECK(c4.applies);
    CHECK_FALSE(c4.violated);

    for (int n = 3; n <= 6; ++n)
        oracle::labeled_connected_classes(n, [&](const Graph& g) {
            CHECK_FALSE(min_degree_guard_check(g).violated);
        });
}

TEST_CASE("circumference") {
    CHECK(circumference(path_graph(7)) == 0);
    CHECK(circumference(star_graph(6)) == 0);
    for (int n = 3; n <= 12; ++n) CHECK(circumference(cycle_graph(n)) == n);
    CHECK(circumference(complete_graph(5)) == 5);
    CHECK(circumference(petersen()) == 9);
    CHECK(circumference(theta_graph(2, 2, 2)) == 6);
    CHECK(circumference(theta_graph(3, 2, 1)) == 7);
    CHECK(circumference(complete_bipartite(2, 3)) == 4);
    CHECK_THROWS_WITH(circumference(cycle_graph(13)), "circumference search limited to n <= 12");
}

TEST_CASE("short cycles forbid soltes vertices") {
    for (int n = 3; n <= 7; ++n)
        oracle::labeled_connected_classes(n, [&](const Graph& g) {
            if (circumference(g) > 4) return;
            CHECK(soltes_profile(g).soltes_count == 0);
        });
}
