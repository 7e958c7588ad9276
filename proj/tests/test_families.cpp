#include <catch2/catch_amalgamated.hpp>

#include "oracle.hpp"
#include "wiener/blocks.hpp"
#include "wiener/canonical.hpp"
#include "wiener/coloring.hpp"
#include "wiener/families.hpp"
#include "wiener/graph.hpp"

using namespace wiener;

TEST_CASE("standard graphs have the expected invariants") {
    CHECK(wiener_index(path_graph(4)) == 10);
    CHECK(wiener_index(star_graph(5)) == 16);
    CHECK(wiener_index(complete_graph(5)) == 10);
    CHECK(wiener_index(cycle_graph(5)) == 15);
    CHECK(wiener_index(complete_bipartite(4, 4)) == 40);
    CHECK(wiener_index(complete_bipartite(2, 3)) == 14);
    CHECK(wiener_index(hypercube_q3()) == 48);

    CHECK(canonical_form(circulant(11, {1})) == canonical_form(cycle_graph(11)));
    CHECK(canonical_form(circulant(8, {1, 3})) == canonical_form(complete_bipartite(4, 4)));
    CHECK(wiener_index(circulant(6, {1, 2})) == 18);
    CHECK(wiener_index(circulant(7, {1, 2})) == 28);
    CHECK(wiener_index(circulant(8, {1, 2})) == 40);
    CHECK(wiener_index(circulant(8, {1, 4})) == 44);
    CHECK_THROWS_AS(circulant(8, {5}), std::invalid_argument);
}

TEST_CASE("petersen and heawood") {
    Graph p = petersen();
    CHECK(p.n == 10);
    CHECK(p.min_degree() == 3);
    CHECK(p.max_degree() == 3);
    CHECK(girth(p) == 5);
    CHECK(eccentricity_profile(p).diameter == 2);
    CHECK(is_vertex_transitive(p));
    CHECK(wiener_index(p) == 75);

    Graph h = heawood();
    CHECK(h.n == 14);
    CHECK(h.min_degree() == 3);
    CHECK(h.max_degree() == 3);
    CHECK(girth(h) == 6);
    CHECK(is_bipartite(h));
    CHECK(is_vertex_transitive(h));
    CHECK(wiener_index(h) == 189);
}

TEST_CASE("brooms") {
    Graph t94 = broom(9, 4);
    CHECK(t94.n == 9);
    CHECK(t94.degree(0) == 4);
    CHECK(eccentricity_profile(t94).diameter == 6);
    CHECK(wiener_index(t94) == 104);
    // maximizer claim sanity: smaller max degree allows larger W
    CHECK(wiener_index(broom(9, 4)) < wiener_index(broom(9, 3)));
    CHECK(wiener_index(broom(9, 3)) < wiener_index(path_graph(9)));
    CHECK(canonical_form(broom(8, 2)) == canonical_form(path_graph(8)));
    CHECK(canonical_form(broom(8, 7)) == canonical_form(star_graph(8)));
    Graph b = broom(12, 5);
    CHECK(is_tree(b));
    CHECK(b.degree(0) == 5);
    CHECK(wiener_index(b) == oracle::slow_wiener(b));
    CHECK_THROWS_AS(broom(5, 5), std::invalid_argument);
}

TEST_CASE("double brooms") {
    CHECK(canonical_form(double_broom(7, 1, 1)) == canonical_form(path_graph(7)));
    Graph d = double_broom(10, 3, 2);
    CHECK(d.n == 10);
    CHECK(is_tree(d));
    CHECK(d.degree(0) == 4);
    CHECK(d.degree(4) == 3);
    CHECK(eccentricity_profile(d).diameter == 10 - 3 - 2 + 1);
    CHECK_THROWS_AS(double_broom(5, 2, 2), std::invalid_argument);
}

TEST_CASE("theta graphs") {
    Graph t111 = theta_graph(1, 1, 1);
    CHECK(canonical_form(t111) == canonical_form(complete_bipartite(2, 3)));
    CHECK(wiener_index(t111) == 14);

    Graph t = theta_graph(3, 2, 1);
    CHECK(t.n == 3 + 2 + 1 + 2);
    CHECK(t.edge_count() == 3 + 2 + 1 + 3);
    CHECK(is_two_connected(t));
    CHECK(wiener_index(t) == oracle::slow_wiener(t));

    Graph chord = theta_graph(2, 2, 0);
    CHECK(chord.n == 6);
    CHECK(chord.edge_count() == 7);
    CHECK(girth(chord) == 4);
    CHECK_THROWS_AS(theta_graph(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(theta_graph(2, 0, 0), std::invalid_argument);
}

TEST_CASE("dumbbells and barbells") {
    CHECK(canonical_form(dumbbell(1, 1, 3)) == canonical_form(path_graph(5)));
    Graph d = dumbbell(3, 3, 1);
    CHECK(d.n == 7);
    CHECK(wiener_index(d) == 46);
    CHECK(blocks(d).block_count() == 4);
    CHECK(blocks(d).all_blocks_complete);

    Graph d2 = dumbbell(4, 3, 5);
    CHECK(d2.n == 12);
    CHECK(blocks(d2).block_count() == 5 + 1 + 2);
    CHECK(wiener_index(d2) == oracle::slow_wiener(d2));
    CHECK_THROWS_AS(dumbbell(2, 3, 1), std::invalid_argument);

    Graph bb = barbell(2, 2, 2, 2, 2);
    CHECK(bb.n == 10);
    CHECK(blocks(bb).block_count() == 5);
    CHECK(is_connected(bb));
}

TEST_CASE("clique with pendants") {
    Graph g = clique_with_pendants(15, 4);
    CHECK(g.n == 15);
    std::vector<int> shares;
    for (int v = 0; v < 4; ++v) shares.push_back(g.degree(v) - 3);
    CHECK(shares == std::vector<int>{3, 3, 3, 2});
    CHECK(eccentricity_profile(g).diameter == 3);

    CHECK(canonical_form(clique_with_pendants(6, 1)) == canonical_form(star_graph(6)));
    CHECK(clique_with_pendants(5, 5) == complete_graph(5));
}

TEST_CASE("diameter-4 maximizer trees") {
    // n = 7 sits on the boundary: both shapes apply and tie
    Graph t7 = diameter4_tree(7);
    Graph t7p = diameter4_tree_prime(7);
    CHECK(wiener_index(t7) == 48);
    CHECK(wiener_index(t7p) == 48);
    CHECK(canonical_form(t7) != canonical_form(t7p));
    CHECK(diameter4_maximizers(7).size() == 2);

    CHECK_THROWS_WITH(diameter4_tree_prime(5), "applicable-side violation");
    CHECK_THROWS_WITH(diameter4_tree(8), "applicable-side violation");

    for (int n = 5; n <= 12; ++n) {
        for (const Graph& t : diameter4_maximizers(n)) {
            CHECK(t.n == n);
            CHECK(is_tree(t));
            CHECK(eccentricity_profile(t).diameter == 4);
        }
    }
}

TEST_CASE("h graphs") {
    CHECK(canonical_form(h_npq(6, 1, 2)) == canonical_form(theta_graph(3, 1, 0)));
    Graph h = h_npq(9, 2, 3);
    CHECK(h.n == 9);
    CHECK(h.edge_count() == 10);
    CHECK(is_two_connected(h));
    CHECK_THROWS_AS(h_npq(6, 3, 2), std::invalid_argument);
    CHECK_THROWS_AS(h_npq(6, 1, 1), std::invalid_argument);

    for (int n = 7; n <= 12; ++n)
        CHECK(wiener_index(h_plus(n)) == wiener_index(h_npq(n, 2, 2)) - 1);
}

TEST_CASE("g_nrs family") {
    Graph g = g_nrs(8, 3, 1);
    CHECK(g.n == 8);
    CHECK(eccentricity_profile(g).radius == 3);
    CHECK(wiener_index(g) == 48);

    // Q_3 also has radius 3 and ties the Wiener index without being one of
    // the G_{8,3,s}, so it refutes the uniqueness half of the radius
    // conjecture on small orders.
    Graph q3 = hypercube_q3();
    CHECK(eccentricity_profile(q3).radius == 3);
    CHECK(wiener_index(q3) == wiener_index(g));
    CHECK(canonical_form(q3) != canonical_form(g_nrs(8, 3, 1)));
    CHECK(canonical_form(q3) != canonical_form(g_nrs(8, 3, 2)));
    CHECK(canonical_form(q3) != canonical_form(g_nrs(8, 3, 3)));

    // the Wiener index does not depend on the clique split
    long long w0 = wiener_index(g_nrs(12, 3, 1));
    for (int s = 2; s <= 12 - 6 + 1; ++s) CHECK(wiener_index(g_nrs(12, 3, s)) == w0);

    CHECK(eccentricity_profile(g_nrs(10, 4, 2)).radius == 4);
    CHECK_THROWS_AS(g_nrs(8, 3, 4), std::invalid_argument);
    CHECK_THROWS_AS(g_nrs(5, 3, 1), std::invalid_argument);
}

TEST_CASE("cambie haslegrave graphs") {
    Graph g = cambie_haslegrave(8, 3);
    CHECK(g.n == 12);
    CHECK(g.degree(8) == 9);
    for (int v = 0; v < 8; ++v) CHECK(g.degree(v) == 6);
    CHECK(g.degree(11) == 1);
    CHECK(is_connected(g));
    CHECK_THROWS_AS(cambie_haslegrave(4, 1), std::invalid_argument);
}

TEST_CASE("soltes B graphs") {
    Graph b = soltes_b(2);
    CHECK(b.n == 16);
    CHECK(b.degree(0) == 3);
    CHECK(b.degree(1) == 3);
    for (int v = 2; v < 16; ++v) CHECK(b.degree(v) == 2);
    CHECK(is_two_connected(b));
    CHECK(girth(b) == 11);
    CHECK(soltes_b(3).n == 21);
    CHECK_THROWS_AS(soltes_b(1), std::invalid_argument);
}

TEST_CASE("join of clique and tree") {
    Graph j = join_clique_tree(2, path_graph(4));
    CHECK(j.n == 6);
    CHECK(wiener_index(j) == 18);
    CHECK(eccentricity_profile(j).diameter <= 2);

    // only order matters, not tree shape
    CHECK(wiener_index(join_clique_tree(3, star_graph(5))) ==
          wiener_index(join_clique_tree(3, path_graph(5))));
    CHECK_THROWS_AS(join_clique_tree(2, cycle_graph(4)), std::invalid_argument);
}

TEST_CASE("two cycles joined by a path") {
    Graph shared = two_cycles_path(3, 2, 3);
    CHECK(shared.n == 5);
    CHECK(blocks(shared).block_count() == 2);

    Graph g = two_cycles_path(5, 4, 4);
    CHECK(g.n == 5 + 4 + 4 - 3);
    CHECK(blocks(g).block_count() == 4);
    CHECK(component_count(g) == 1);

    CHECK(canonical_form(two_cycles_path(2, 4, 2)) == canonical_form(path_graph(5)));
    CHECK(wiener_index(g) == oracle::slow_wiener(g));
}

TEST_CASE("coloring counterexample fixture") {
    Graph g = coloring_counterexample();
    CHECK(g.n == 18);
    CHECK(g.edge_count() == 19);
    CHECK(chromatic_number(g) == 3);
    int pendants = 0;
    for (int v = 0; v < g.n; ++v) pendants += g.degree(v) == 1;
    CHECK(pendants == 12);
}

TEST_CASE("maximum wiener cubic graphs") {
    for (int n : {10, 12, 14, 16, 18}) {
        Graph g = cubic_max(n);
        CHECK(g.n == n);
        CHECK(g.min_degree() == 3);
        CHECK(g.max_degree() == 3);
        CHECK(is_connected(g));
    }
    CHECK(blocks(cubic_max(10)).block_count() == 3);
    CHECK(blocks(cubic_max(12)).block_count() == 3);
    CHECK(blocks(cubic_max(14)).block_count() == 5);
    CHECK_THROWS_AS(cubic_max(9), std::invalid_argument);
    CHECK_THROWS_AS(cubic_max(8), std::invalid_argument);
}

TEST_CASE("standard graph dispatch") {
    CHECK(standard_graph("cycle", {5}) == cycle_graph(5));
    CHECK(standard_graph("circulant", {8, 1, 3}) == circulant(8, {1, 3}));
    CHECK(standard_graph("petersen", {}) == petersen());
    CHECK(standard_graph("grid", {2, 6}).n == 12);
    CHECK_THROWS_AS(standard_graph("frobnicate", {3}), std::invalid_argument);
    CHECK_THROWS_AS(standard_graph("cycle", {5, 7}), std::invalid_argument);
}
