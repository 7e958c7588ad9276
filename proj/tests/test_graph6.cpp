#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "oracle.hpp"
#include "wiener/families.hpp"
#include "wiener/graph6.hpp"

using namespace wiener;

TEST_CASE("graph6 frozen encodings") {
    CHECK(graph6_encode(Graph::empty(1)) == "@");
    CHECK(graph6_encode(Graph::empty(0)) == "?");
    CHECK(graph6_encode(complete_graph(2)) == "A_");
    CHECK(graph6_encode(path_graph(4)) == "Ch");
    CHECK(graph6_encode(cycle_graph(5)) == "Dhc");

    CHECK(graph6_decode("A_") == complete_graph(2));
    CHECK(graph6_decode("@").n == 1);
    CHECK(graph6_decode("Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(20260814);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = Graph::empty(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    Graph big = cycle_graph(62);
    CHECK(graph6_decode(graph6_encode(big)) == big);
    CHECK(graph6_decode(graph6_encode(petersen())) == petersen());
    CHECK(graph6_decode(graph6_encode(complete_graph(13))) == complete_graph(13));
}

TEST_CASE("graph6 malformed input") {
    CHECK_THROWS_WITH(graph6_decode(""), "graph6: empty line");
    CHECK_THROWS_WITH(graph6_decode("A"), "graph6: truncated body");
    CHECK_THROWS_WITH(graph6_decode("A_x"), "graph6: trailing characters");
    CHECK_THROWS_WITH(graph6_decode("B@"), "graph6: nonzero padding bits");
    CHECK_THROWS_WITH(graph6_decode("A "), "graph6: character out of range 63..126");
    CHECK_THROWS_WITH(graph6_decode("\x7f_"), "graph6: character out of range 63..126");
    CHECK_THROWS_WITH(graph6_decode("~??"), "graph6: only the short form (n <= 62) is supported");
    CHECK_THROWS_AS(graph6_encode(Graph::empty(63)), std::invalid_argument);
}

TEST_CASE("graph6 stream reader") {
    std::stringstream in;
    in << ">>graph6<<" << graph6_encode(petersen()) << "\n";
    in << "\n";
    in << graph6_encode(path_graph(4)) << "\r\n";
    in << graph6_encode(complete_graph(3)) << "  \n";
    std::vector<Graph> got;
    read_graph6_stream(in, [&](const Graph& g) { got.push_back(g); });
    REQUIRE(got.size() == 3);
    CHECK(got[0] == petersen());
    CHECK(got[1] == path_graph(4));
    CHECK(got[2] == complete_graph(3));
}
