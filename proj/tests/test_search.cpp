#include <doctest.h>

#include "helpers.hpp"
#include "icolor/constructions.hpp"
#include "icolor/search.hpp"

using namespace icolor;
using icolor::testing::petersen_graph;

TEST_CASE("find_interval_t: witnesses and refutations") {
    // C_4 with 2 colors: the alternating coloring
    SearchOutcome c4 = find_interval_t(cycle_graph(4), 2);
    REQUIRE(c4.status == SearchStatus::Found);
    IntervalCertificate cert = verify_interval(*c4.coloring);
    CHECK(cert.valid);
    CHECK(cert.t == 2);

    // K_{2,3} has no interval 3-coloring (w = 4)
    CHECK(find_interval_t(complete_bipartite_graph(2, 3), 3).status ==
          SearchStatus::ProvenNone);

    // Q_3 has no interval 7-coloring (range is 3..6)
    CHECK(find_interval_t(hypercube_graph(3), 7).status == SearchStatus::ProvenNone);

    // t below the maximum degree is immediately impossible
    SearchOutcome low = find_interval_t(complete_graph(4), 2);
    CHECK(low.status == SearchStatus::ProvenNone);
    CHECK(low.nodes_expanded == 0);

    // isolated vertex in a non-edgeless graph never verifies
    CHECK(find_interval_t(Graph("iso", 3, {{0, 1}}), 1).status ==
          SearchStatus::ProvenNone);
}

TEST_CASE("find_interval_t: found witnesses always verify") {
    std::vector<Graph> suite = {path_graph(4), cycle_graph(6), complete_graph(4),
                                star_graph(5), complete_bipartite_graph(2, 2)};
    for (const Graph& g : suite)
        for (int t = 1; t <= g.num_edges(); ++t) {
            SearchOutcome o = find_interval_t(g, t);
            if (o.status == SearchStatus::Found) {
                IntervalCertificate cert = verify_interval(*o.coloring);
                CHECK(cert.valid);
                CHECK(cert.t == t);
            }
        }
}

TEST_CASE("bounds: K_{2,3}, C_4, K_2") {
    BoundsResult kb = bounds(complete_bipartite_graph(2, 3));
    CHECK(kb.complete);
    CHECK(kb.interval_colorable);
    CHECK(kb.w == 4);
    CHECK(kb.W == 4);
    CHECK(kb.achievable == std::vector<int>{4});

    BoundsResult c4 = bounds(cycle_graph(4));
    CHECK(c4.w == 2);
    CHECK(c4.W == 3);
    CHECK(c4.achievable == std::vector<int>{2, 3});

    BoundsResult k2 = bounds(complete_graph(2));
    CHECK(k2.w == 1);
    CHECK(k2.W == 1);

    // odd cycles are class 2, hence not interval colorable
    BoundsResult c5 = bounds(cycle_graph(5));
    CHECK(c5.complete);
    CHECK_FALSE(c5.interval_colorable);
    CHECK(c5.achievable.empty());
}

TEST_CASE("find_continuous_use: trees and K_{2,3} succeed") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Graph t = random_tree(6, seed);
        SearchOutcome o = find_continuous_use(t);
        REQUIRE(o.status == SearchStatus::Found);
        CHECK(verify_interval(*o.coloring).valid);
        CHECK(is_continuous(use(*o.coloring)));
        // the constructive witness agrees with the oracle's existence claim
        CHECK(is_continuous(use(tree_continuous_use(t))));
    }

    SearchOutcome kb = find_continuous_use(complete_bipartite_graph(2, 3));
    REQUIRE(kb.status == SearchStatus::Found);
    CHECK(is_continuous(use(*kb.coloring)));
}

TEST_CASE("find_continuous_use: K_{1,1,4} is proven impossible") {
    Graph k114 = complete_multipartite_graph({1, 1, 4});
    SearchOutcome o = find_continuous_use(k114);
    CHECK(o.status == SearchStatus::ProvenNone);
    // ... while the graph itself is interval colorable
    BoundsResult b = bounds(k114);
    CHECK(b.complete);
    CHECK(b.interval_colorable);
}

TEST_CASE("chromatic_index_small: K_4, C_5, Petersen") {
    CHECK(chromatic_index_small(complete_graph(4)).chi == 3);
    CHECK(chromatic_index_small(cycle_graph(5)).chi == 3);
    CHECK(chromatic_index_small(petersen_graph()).chi == 4);
    CHECK(chromatic_index_small(empty_graph(2)).chi == 0);
}

TEST_CASE("oracle cross-checks on constructive families") {
    // interval colorability forces chromatic index Δ
    std::vector<Graph> suite = {cycle_graph(6), complete_graph(4),
                                complete_bipartite_graph(3, 3), path_graph(5)};
    for (const Graph& g : suite) {
        BoundsResult b = bounds(g);
        REQUIRE(b.interval_colorable);
        CHECK(chromatic_index_small(g).chi == g.max_degree());
        // constructive colorings land inside [w, W]
    }
    EdgeColoring c6 = even_cycle_color(6);
    BoundsResult bc6 = bounds(cycle_graph(6));
    int t6 = verify_interval(c6).t;
    CHECK(bc6.w <= t6);
    CHECK(t6 <= bc6.W);
}

TEST_CASE("triangle-free bound: achievable t stays below |V|") {
    std::vector<Graph> suite = {cycle_graph(4), cycle_graph(6), path_graph(5),
                                star_graph(5), complete_bipartite_graph(2, 3),
                                random_tree(7, 3)};
    for (const Graph& g : suite) {
        REQUIRE(classify(g).is_triangle_free);
        BoundsResult b = bounds(g);
        for (int t : b.achievable) CHECK(t <= g.num_vertices() - 1);
    }
}

TEST_CASE("budget exhaustion is distinct from proven-none") {
    SearchBudget tiny;
    tiny.max_nodes = 3;
    SearchOutcome o = find_interval_t(complete_bipartite_graph(3, 3), 5, tiny);
    CHECK(o.status == SearchStatus::BudgetExhausted);

    SearchBudget small_edges;
    small_edges.max_edges = 4;
    CHECK(find_interval_t(complete_graph(4), 3, small_edges).status ==
          SearchStatus::BudgetExhausted);
    CHECK_FALSE(bounds(complete_graph(4), small_edges).complete);

    CHECK_THROWS_AS(find_interval_t(complete_graph(3), 3, SearchBudget{0, {}, {}, 0}),
                    std::invalid_argument);
}

TEST_CASE("determinism: repeated runs and thread counts agree") {
    Graph g = complete_bipartite_graph(3, 3);
    SearchOutcome a = find_interval_t(g, 4);
    SearchOutcome b = find_interval_t(g, 4);
    REQUIRE(a.status == SearchStatus::Found);
    REQUIRE(b.status == SearchStatus::Found);
    CHECK(a.coloring->colors == b.coloring->colors);

    SearchBudget threaded;
    threaded.threads = 4;
    SearchOutcome c = find_interval_t(g, 4, threaded);
    REQUIRE(c.status == SearchStatus::Found);
    CHECK(c.coloring->colors == a.coloring->colors);

    SearchOutcome n1 = find_continuous_use(cycle_graph(6));
    SearchOutcome n2 = find_continuous_use(cycle_graph(6), threaded);
    REQUIRE(n1.status == SearchStatus::Found);
    REQUIRE(n2.status == SearchStatus::Found);
    CHECK(n1.coloring->colors == n2.coloring->colors);
}
