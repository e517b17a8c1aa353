#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"

using namespace turan;

TEST_CASE("make_graph basics") {
    Graph k3 = make_graph(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.edge_count() == 3);
    CHECK(make_graph(4, {}).edge_count() == 0);
    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(c5.edge_count() == 5);
    CHECK(c5.min_degree() == 2);
    // duplicates collapse
    CHECK(make_graph(2, {{0, 1}, {1, 0}, {0, 1}}).edge_count() == 1);
    CHECK_THROWS_AS(make_graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{1, 1}}), std::invalid_argument);
}

TEST_CASE("turan graph shapes") {
    CHECK(turan_graph(6, 3).edge_count() == 12);
    CHECK(turan_graph(5, 3).edge_count() == 8);
    CHECK(turan_graph(4, 1).edge_count() == 0);
    CHECK(turan_graph(4, 1).vertex_count() == 4);
    CHECK_THROWS_AS(turan_graph(5, 0), std::invalid_argument);
    // maximal among complete r-partite graphs with r parts, n <= 20
    for (int r = 1; r <= 5; ++r) {
        for (int n = r; n <= 20; ++n) {
            int turan_edges = turan_graph(n, r).edge_count();
            for_each_composition(n, r, [&](const std::vector<int>& parts) {
                if (static_cast<int>(parts.size()) != r) return;
                CHECK(turan_edges >=
                      complete_multipartite(PartComposition(parts)).edge_count());
            });
        }
    }
}

TEST_CASE("complete multipartite") {
    CHECK(oracles::isomorphic(complete_multipartite(PartComposition({2, 2})), cycle_graph(4)));
    CHECK(complete_multipartite(PartComposition({3, 2, 2})).edge_count() == 16);
    CHECK(complete_multipartite(PartComposition({3, 2, 2})) == turan_graph(7, 3));
    CHECK(complete_multipartite(PartComposition({5})).edge_count() == 0);
    CHECK_THROWS_AS(PartComposition({2, 0}), std::invalid_argument);
}

TEST_CASE("blowup") {
    CHECK(oracles::isomorphic(blowup(complete_graph(2), {2, 2}),
                              complete_multipartite(PartComposition({2, 2}))));
    CHECK(blowup(cycle_graph(5), {1, 1, 1, 1, 1}) == cycle_graph(5));
    Graph b = blowup(complete_graph(3), {2, 1, 1});
    CHECK(b.vertex_count() == 4);
    CHECK(b.edge_count() == 5);
    CHECK_THROWS_AS(blowup(complete_graph(2), {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(blowup(complete_graph(2), {1}), std::invalid_argument);
}

TEST_CASE("homomorphism") {
    CHECK(has_homomorphism(cycle_graph(4), complete_graph(2)));
    CHECK_FALSE(has_homomorphism(complete_graph(3), complete_graph(2)));
    CHECK(has_homomorphism(cycle_graph(5), cycle_graph(5)));
    CHECK_FALSE(has_homomorphism(cycle_graph(5), cycle_graph(7)));
    CHECK(has_homomorphism(cycle_graph(7), cycle_graph(5)));
    CHECK_THROWS_AS(has_homomorphism(Graph(0), complete_graph(2)), std::invalid_argument);
}

TEST_CASE("homomorphism iff blowup containment") {
    // Exhaustive over all pairs of graphs on <= 4 vertices, plus a seeded
    // sample of pairs on 5.
    std::vector<Graph> small;
    for (int n = 1; n <= 4; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (const Graph& g : enumerate_free_graphs(spec)) small.push_back(g);
    }
    for (const Graph& from : small) {
        for (const Graph& to : small) {
            std::vector<int> mult(to.vertex_count(), from.vertex_count());
            bool hom = has_homomorphism(from, to);
            bool contained = contains_subgraph(blowup(to, mult), from);
            CHECK(hom == contained);
        }
    }
    EnumerationSpec five;
    five.n = 5;
    std::vector<Graph> fives = enumerate_free_graphs(five);
    std::mt19937 rng(424242);
    for (int t = 0; t < 150; ++t) {
        const Graph& from = fives[rng() % fives.size()];
        const Graph& to = fives[rng() % fives.size()];
        std::vector<int> mult(to.vertex_count(), from.vertex_count());
        CHECK(has_homomorphism(from, to) == contains_subgraph(blowup(to, mult), from));
    }
}

TEST_CASE("subgraph containment") {
    CHECK_FALSE(contains_subgraph(turan_graph(6, 3), complete_graph(4)));
    CHECK(contains_subgraph(complete_graph(4), complete_graph(3)));
    CHECK(contains_subgraph(oracles::petersen(), cycle_graph(5)));
    CHECK_FALSE(contains_subgraph(oracles::petersen(), complete_graph(3)));
    // not induced: C4 sits inside K4
    CHECK(contains_subgraph(complete_graph(4), cycle_graph(4)));
}

TEST_CASE("chromatic number") {
    CHECK(chromatic_number(cycle_graph(5)) == 3);
    CHECK(chromatic_number(turan_graph(8, 4)) == 4);
    CHECK(chromatic_number(empty_graph(5)) == 1);
    CHECK(chromatic_number(Graph(0)) == 0);
    CHECK(chromatic_number(oracles::petersen()) == 3);
    for (int parts = 1; parts <= 4; ++parts) {
        std::vector<int> sizes(parts, 2);
        CHECK(chromatic_number(complete_multipartite(PartComposition(sizes))) == parts);
    }
}

TEST_CASE("odd girth") {
    CHECK(odd_girth(cycle_graph(7)) == 7);
    CHECK_FALSE(odd_girth(complete_multipartite(PartComposition({3, 3}))).has_value());
    CHECK(odd_girth(oracles::petersen()) == 5);
    // agrees with the brute-force oracle and with 2-colorability on all
    // graphs up to 6 vertices
    for (int n = 1; n <= 6; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (const Graph& g : enumerate_free_graphs(spec)) {
            CHECK(odd_girth(g) == oracles::odd_girth(g));
            CHECK((chromatic_number(g) <= 2) == !odd_girth(g).has_value());
        }
    }
}

TEST_CASE("canonical form respects isomorphism") {
    Graph c4 = cycle_graph(4);
    Graph k22 = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    CHECK(canonical_form(c4) == canonical_form(k22));
    CHECK(canonical_form(complete_graph(3)) != canonical_form(path_graph(3)));

    EnumerationSpec four;
    four.n = 4;
    CHECK(enumerate_free_graphs(four).size() == 11);

    // all pairs on <= 5 vertices against the brute-force bijection oracle
    std::vector<Graph> graphs;
    for (int n = 1; n <= 5; ++n) {
        EnumerationSpec spec;
        spec.n = n;
        for (const Graph& g : enumerate_free_graphs(spec)) graphs.push_back(g);
    }
    for (const Graph& a : graphs)
        for (const Graph& b : graphs)
            CHECK((canonical_form(a) == canonical_form(b)) == oracles::isomorphic(a, b));

    // random relabelings land on the same canonical string
    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        int n = 2 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0x80000000u, rng);
        std::vector<int> perm(n);
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        Graph relabeled(n);
        for (auto [u, v] : g.edges()) relabeled = relabeled.with_edge(perm[u], perm[v]);
        CHECK(canonical_form(g) == canonical_form(relabeled));
    }
}

TEST_CASE("graph6 round trip and fixed points") {
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_decode("?").vertex_count() == 0);
    CHECK(graph6_encode(complete_graph(4)) == "C~");
    CHECK(graph6_decode(">>graph6<<C~") == complete_graph(4));
    // decode(encode) is the identity on every labeled graph up to 5 vertices
    for (int n = 0; n <= 5; ++n)
        for (const Graph& g : oracles::all_labeled_graphs(n))
            CHECK(graph6_decode(graph6_encode(g)) == g);
}

TEST_CASE("graph6 malformed input carries a byte offset") {
    try {
        graph6_decode("C~~");
        FAIL("expected FormatError");
    } catch (const FormatError& e) {
        CHECK(e.offset == 2);
    }
    CHECK_THROWS_AS(graph6_decode(""), FormatError);
    CHECK_THROWS_AS(graph6_decode("C"), FormatError);
    CHECK_THROWS_AS(graph6_decode("C\x01\x01"), FormatError);
    // nonzero padding bits
    CHECK_THROWS_AS(graph6_decode("B~"), FormatError);
}

TEST_CASE("edge list round trip") {
    Graph g = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK(edge_list_decode(edge_list_encode(g)) == g);
    CHECK_THROWS_AS(edge_list_decode("3 1\n0 3\n"), FormatError);
    CHECK_THROWS_AS(edge_list_decode("hello"), FormatError);
}

TEST_CASE("graph shortcuts") {
    Graph g;
    REQUIRE(parse_graph_shortcut("K5", g));
    CHECK(g == complete_graph(5));
    REQUIRE(parse_graph_shortcut("K3,3", g));
    CHECK(g == complete_multipartite(PartComposition({3, 3})));
    REQUIRE(parse_graph_shortcut("C7", g));
    CHECK(g == cycle_graph(7));
    REQUIRE(parse_graph_shortcut("P4", g));
    CHECK(g == path_graph(4));
    REQUIRE(parse_graph_shortcut("T10:3", g));
    CHECK(g == turan_graph(10, 3));
    CHECK_FALSE(parse_graph_shortcut("X4", g));
    CHECK_FALSE(parse_graph_shortcut("K", g));
}
