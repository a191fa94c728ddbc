#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "errors.hpp"
#include "generators.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "rng.hpp"
#include "test_util.hpp"

using namespace bmp;

TEST_CASE("edge list parsing") {
    Graph p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK(!p3.has_edge(0, 2));

    Graph c4 = parse_edge_list("n 4\n0 1\n1 2\n2 3\n3 0");
    CHECK(c4 == gen_cycle(4));

    SUBCASE("comments and whitespace") {
        Graph g = parse_edge_list("# a path\n\n  0   1  # edge\n\t1 2\n");
        CHECK(g == p3);
    }
    SUBCASE("header fixes isolated vertices") {
        CHECK(parse_edge_list("n 5\n0 1").order() == 5);
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(parse_edge_list("0 0"), ValidationError);
        CHECK_THROWS_AS(parse_edge_list("0 1\n1 0"), ValidationError);
        CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
        CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);
        CHECK_THROWS_WITH(parse_edge_list("0 1\nbroken"), doctest::Contains("line 2"));
    }
}

TEST_CASE("edge list round trip") {
    SplitMix64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        Graph g = testutil::random_graph(rng, 1 + static_cast<int>(rng.next_below(12)), 0.3);
        CHECK(parse_edge_list(to_edge_list(g)) == g);
    }
}

TEST_CASE("graph6 known strings") {
    Graph star = parse_graph6("D?{");
    CHECK(star.order() == 5);
    CHECK(star.edge_count() == 4);
    for (int v = 0; v < 4; ++v) CHECK(star.has_edge(v, 4));
    CHECK(encode_graph6(star) == "D?{");

    CHECK(encode_graph6(Graph(1)) == "@");
    CHECK(parse_graph6("@") == Graph(1));

    Graph c4 = gen_cycle(4);
    CHECK(parse_graph6(encode_graph6(c4)) == c4);

    CHECK(parse_graph6(">>graph6<<D?{") == star);
}

TEST_CASE("graph6 errors") {
    CHECK_THROWS_AS(parse_graph6(""), FormatError);
    CHECK_THROWS_AS(parse_graph6("D?"), FormatError);   // truncated bit stream
    CHECK_THROWS_AS(parse_graph6("D?{{"), FormatError); // trailing bytes
    CHECK_THROWS_AS(parse_graph6("D\x1f{"), FormatError);
    CHECK_THROWS_AS(parse_graph6("C\x7f"), FormatError);
}

TEST_CASE("graph6 round trips") {
    SplitMix64 rng(7);
    for (int iter = 0; iter < 300; ++iter) {
        int n = static_cast<int>(rng.next_below(30));
        Graph g = testutil::random_graph(rng, n, rng.next_unit());
        std::string s = encode_graph6(g);
        CHECK(parse_graph6(s) == g);       // decode ∘ encode
        CHECK(encode_graph6(parse_graph6(s)) == s); // encode ∘ decode
    }
    // Multi-byte order encoding.
    Graph big(100);
    CHECK(parse_graph6(encode_graph6(big)) == big);
}

TEST_CASE("generators") {
    CHECK(gen_cycle(4).edge_count() == 4);
    CHECK(gen_path(7).edge_count() == 6);
    CHECK(gen_complete(5).edge_count() == 10);
    CHECK(gen_grid(3, 3).order() == 9);
    CHECK(gen_grid(3, 3).edge_count() == 12);

    SUBCASE("figure graphs") {
        Graph a = gen_fig3a(), b = gen_fig3b(), c = gen_fig3c();
        CHECK(a.order() == 12);
        CHECK(a.edge_count() == 15);
        CHECK(b.order() == 14);
        CHECK(b.edge_count() == 20);
        CHECK(b.degree(12) == 2);
        CHECK(b.degree(13) == 2);
        CHECK(c.order() == 16);
        CHECK(c.edge_count() == 24);
    }

    SUBCASE("spider skeleton") {
        // Length-6k spine plus a branch of length 3k+3k' at the midpoint:
        // 9k + 3k' + 1 vertices.
        Graph s11 = gen_spider(1, 1);
        CHECK(s11.order() == 13);
        CHECK(s11.degree(3) == 3); // midpoint x
        CHECK(s11.edge_count() == 12);
        CHECK(gen_spider(2, 2).order() == 25);
        CHECK(gen_spider(3, 0).order() == 28);
    }

    SUBCASE("gnp is deterministic in the seed") {
        Graph g1 = gen_gnp(20, 0.3, 42);
        Graph g2 = gen_gnp(20, 0.3, 42);
        Graph g3 = gen_gnp(20, 0.3, 43);
        CHECK(g1 == g2);
        CHECK(g1.order() == 20);
        CHECK(!(g1 == g3)); // astronomically unlikely to collide
    }

    SUBCASE("dispatch by name") {
        CHECK(generate("cycle:4") == gen_cycle(4));
        CHECK(generate("grid:3,3") == gen_grid(3, 3));
        CHECK(generate("fig3c") == gen_fig3c());
        CHECK(generate("gnp:10,0.5,1") == gen_gnp(10, 0.5, 1));
        CHECK_THROWS_AS(generate("moebius:5"), ParseError);
        CHECK_THROWS_AS(generate("cycle:x"), ParseError);
        CHECK_THROWS_AS(generate("cycle:2"), ValidationError);
        CHECK_THROWS_AS(generate("gnp:10,1.5,1"), ValidationError);
    }
}

TEST_CASE("adjacency symmetry and simplicity hold for all generated graphs") {
    SplitMix64 rng(3);
    std::vector<Graph> graphs = {gen_path(9),  gen_cycle(8),    gen_complete(6),
                                 gen_grid(4, 5), gen_spider(2, 1), gen_fig3a(),
                                 gen_fig3b(),  gen_fig3c(),     gen_gnp(25, 0.2, 5)};
    for (int i = 0; i < 20; ++i)
        graphs.push_back(testutil::random_graph(rng, 1 + static_cast<int>(rng.next_below(15)), 0.4));
    for (const auto& g : graphs) {
        for (int u = 0; u < g.order(); ++u) {
            const auto& nb = g.neighbors(u);
            CHECK(std::is_sorted(nb.begin(), nb.end()));
            CHECK(std::adjacent_find(nb.begin(), nb.end()) == nb.end());
            for (int v : nb) {
                CHECK(v != u);
                CHECK(g.has_edge(v, u));
            }
        }
    }
}

TEST_CASE("connected components") {
    auto comps = connected_components(gen_cycle(4));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0] == std::vector<int>{0, 1, 2, 3});

    Graph two = parse_edge_list("0 1\n2 3");
    comps = connected_components(two);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2, 3});

    comps = connected_components(Graph(3));
    REQUIRE(comps.size() == 3);
    CHECK(comps[2] == std::vector<int>{2});

    CHECK(is_connected(Graph(0)));
    CHECK(!is_connected(two));
}
