#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "turan/counting.hpp"
#include "turan/extremal.hpp"
#include "turan/graph.hpp"
#include "turan/graph_io.hpp"
#include "turan/partition.hpp"

using namespace turan;

namespace {

Graph k(int n) { return complete_graph(n); }

std::vector<Graph> enumerate(int n, GraphFamily forbidden = {}) {
    EnumerationSpec spec;
    spec.n = n;
    spec.forbidden = std::move(forbidden);
    return enumerate_free_graphs(spec);
}

}  // namespace

TEST_CASE("exhaustive enumeration counts") {
    CHECK(enumerate(4, {k(3)}).size() == 7);
    CHECK(enumerate(3).size() == 4);
    CHECK(enumerate(5, {k(2)}).size() == 1);
    // unrestricted counts for n <= 7
    const std::size_t all_counts[] = {1, 1, 2, 4, 11, 34, 156, 1044};
    for (int n = 0; n <= 7; ++n) CHECK(enumerate(n).size() == all_counts[n]);
    // triangle-free counts for n <= 8
    const std::size_t tf_counts[] = {1, 1, 2, 3, 7, 14, 38, 107, 410};
    for (int n = 0; n <= 8; ++n) CHECK(enumerate(n, {k(3)}).size() == tf_counts[n]);
}

TEST_CASE("enumeration emits free graphs with distinct canonical forms") {
    for (int n : {5, 6}) {
        auto graphs = enumerate(n, {k(3)});
        std::set<std::string> forms;
        for (const Graph& g : graphs) {
            CHECK_FALSE(contains_subgraph(g, k(3)));
            CHECK(g.vertex_count() == n);
            forms.insert(canonical_form(g));
        }
        CHECK(forms.size() == graphs.size());
    }
}

TEST_CASE("enumeration ceiling refusal") {
    EnumerationSpec spec;
    spec.n = 10;
    CHECK_THROWS_AS(enumerate_free_graphs(spec), CeilingError);  // empty family: ceiling 9
    spec.forbidden = {k(3)};
    spec.n = 11;
    CHECK_THROWS_AS(enumerate_free_graphs(spec), CeilingError);
    spec.ceiling = 11;  // explicit override is honored
    spec.n = 5;
    CHECK(enumerate_free_graphs(spec).size() == 14);
}

TEST_CASE("seeded sampling is reproducible and free") {
    EnumerationSpec spec;
    spec.n = 8;
    spec.forbidden = {k(4)};
    spec.sample = RandomSampleMode{30, 99, 0x80000000u};
    std::uint64_t attempts1 = 0, attempts2 = 0;
    auto a = enumerate_free_graphs(spec, &attempts1);
    auto b = enumerate_free_graphs(spec, &attempts2);
    CHECK(a.size() == 30);
    CHECK(attempts1 == attempts2);
    CHECK(attempts1 >= 30);
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i] == b[i]);
        CHECK_FALSE(contains_subgraph(a[i], k(4)));
    }
}

TEST_CASE("exact extremal numbers") {
    auto r1 = ex_exact(5, k(2), k(3));
    CHECK(r1.value == 6);
    CHECK(r1.extremal.size() == 1);
    CHECK(graph6_decode(r1.extremal.front()) == canonical_graph(turan_graph(5, 2)));

    auto r2 = ex_exact(6, k(3), k(4));
    CHECK(r2.value == 8);
    bool has_turan = false;
    for (const auto& s : r2.extremal)
        if (graph6_decode(s) == canonical_graph(turan_graph(6, 3))) has_turan = true;
    CHECK(has_turan);

    // no closed form here: cross-check the full scan against the dumb
    // subset-counting oracle
    auto r3 = ex_exact(6, cycle_graph(4), k(3));
    Count oracle_best = 0;
    for (const Graph& g : enumerate(6, {k(3)}))
        oracle_best = std::max(oracle_best, oracles::subgraph_copy_count(cycle_graph(4), g));
    CHECK(r3.value == oracle_best);
    CHECK(r3.value == 9);  // K_{3,3}

    // monotone in n: adding an isolated vertex never loses copies
    for (int n = 3; n <= 6; ++n)
        CHECK(ex_exact(n + 1, k(3), k(4)).value >= ex_exact(n, k(3), k(4)).value);
}

TEST_CASE("clique extremal counts match the turan graph") {
    // ex(n, K_k, K_{r+1}) = N(K_k, T(n,r)) for 3 <= k <= r <= 4
    for (int n = 3; n <= 8; ++n) {
        for (int r = 3; r <= 4; ++r) {
            for (int kk = 3; kk <= r; ++kk) {
                CHECK(ex_exact(n, k(kk), k(r + 1)).value ==
                      count_copies(k(kk), turan_graph(n, r)));
            }
        }
    }
}

TEST_CASE("multipartite patterns are maximized by complete multipartite hosts") {
    std::vector<Graph> patterns = {k(3), complete_multipartite(PartComposition({1, 2})),
                                   complete_multipartite(PartComposition({2, 2})),
                                   complete_multipartite(PartComposition({1, 1, 2}))};
    for (const Graph& H : patterns)
        for (int r = 2; r <= 3; ++r)
            for (int n = 1; n <= 8; ++n)
                CHECK(ex_exact(n, H, k(r + 1)).value == ex_multipartite(n, H, r).value);
}

TEST_CASE("multipartite extremal scan") {
    auto r1 = ex_multipartite(6, complete_multipartite(PartComposition({1, 2})), 2);
    CHECK(r1.value == 18);
    CHECK(r1.best.normalized() == std::vector<int>{3, 3});

    auto r2 = ex_multipartite(6, k(3), 3);
    CHECK(r2.value == 8);
    CHECK(r2.best.normalized() == std::vector<int>{2, 2, 2});

    auto r3 = ex_multipartite(7, k(3), 3);
    CHECK(r3.value == 12);
    CHECK(r3.best.normalized() == std::vector<int>{3, 2, 2});

    // table covers all compositions of 6 into <= 3 parts
    CHECK(r2.table.size() == 7);
}

TEST_CASE("part sizes probe") {
    auto exact = part_sizes_probe(9, k(3), 3, Rational(0));
    REQUIRE(exact.near_optimal.size() == 1);
    CHECK(exact.near_optimal.front().composition.normalized() == std::vector<int>{3, 3, 3});
    CHECK(exact.empirical_gamma == Rational(1, 3));
    CHECK(exact.all_have_r_parts);

    // budget of 2 copies: 24 < 25 keeps [4,3,2] out
    auto loose = part_sizes_probe(9, k(3), 3, Rational(2, 729));
    CHECK(loose.near_optimal.size() == 1);

    auto wide = part_sizes_probe(9, k(3), 3, Rational(1, 10));
    CHECK(wide.near_optimal.size() > 1);
    CHECK_FALSE(wide.all_have_r_parts);

    auto c4 = part_sizes_probe(8, cycle_graph(4), 2, Rational(0));
    REQUIRE_FALSE(c4.near_optimal.empty());
    CHECK(c4.near_optimal.front().composition.normalized() == std::vector<int>{4, 4});
}

TEST_CASE("stability profile and envelope") {
    auto profile = stability_profile(5, k(2), k(3), 2);
    CHECK(profile.rows.size() == 14);
    CHECK(profile.ex_value == 6);
    CHECK(profile.rows.front().deficiency == 0);
    CHECK(profile.rows.front().dist_turan == 0);
    // sorted by deficiency, every row is a K3-free graph attaining ex-def
    Count prev = 0;
    for (const auto& row : profile.rows) {
        CHECK(row.deficiency >= prev);
        prev = row.deficiency;
        Graph g = graph6_decode(row.canonical);
        CHECK_FALSE(contains_subgraph(g, k(3)));
        CHECK(count_copies(k(2), g) == profile.ex_value - row.deficiency);
    }

    auto env = envelope(profile);
    REQUIRE_FALSE(env.empty());
    CHECK(env.front().deficiency == 0);
    CHECK(env.front().max_dist_turan == 0);
    int t = 0, m = 0;
    for (const auto& row : env) {
        CHECK(row.max_dist_turan >= t);
        CHECK(row.max_dist_multipartite >= m);
        t = row.max_dist_turan;
        m = row.max_dist_multipartite;
    }

    // single-graph profile: envelope is one row at deficiency zero
    auto lone = stability_profile(5, k(2), k(2), 2);
    CHECK(lone.rows.size() == 1);
    auto lone_env = envelope(lone);
    CHECK(lone_env.size() == 1);
    CHECK(lone_env.front().deficiency == 0);

    // n=4: the only deficiency-0 row is K_{2,2} itself
    auto p4 = stability_profile(4, k(2), k(3), 2);
    CHECK(p4.rows.front().deficiency == 0);
    CHECK(p4.rows.front().dist_turan == 0);
    CHECK(graph6_decode(p4.rows.front().canonical) == canonical_graph(turan_graph(4, 2)));
    CHECK(p4.rows[1].deficiency > 0);
}

TEST_CASE("compositions enumeration") {
    std::vector<std::vector<int>> got;
    for_each_composition(6, 2, [&](const std::vector<int>& p) { got.push_back(p); });
    CHECK(got == std::vector<std::vector<int>>{{6}, {5, 1}, {4, 2}, {3, 3}});
    int count = 0;
    for_each_composition(10, 10, [&](const std::vector<int>&) { ++count; });
    CHECK(count == 42);  // partitions of 10
}
