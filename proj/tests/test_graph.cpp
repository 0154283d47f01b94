#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "icolor/graph.hpp"

using namespace icolor;

TEST_CASE("graph canonicalization and validation") {
    Graph g("g", 4, {{2, 0}, {3, 1}, {0, 1}});
    REQUIRE(g.num_edges() == 3);
    CHECK(g.edge(0) == Edge{0, 1});
    CHECK(g.edge(1) == Edge{0, 2});
    CHECK(g.edge(2) == Edge{1, 3});
    CHECK(g.edge_index(3, 1) == 2);
    CHECK(g.edge_index(2, 3) == -1);

    CHECK_THROWS_AS(Graph("loop", 2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph("dup", 3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph("range", 2, {{0, 2}}), std::invalid_argument);
}

TEST_CASE("composition index is a bijection") {
    CompositionIndex idx{3, 4};
    std::set<int> seen;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 4; ++j) {
            int f = idx.flat(i, j);
            CHECK(idx.unflat(f) == std::pair(i, j));
            seen.insert(f);
        }
    CHECK(seen.size() == 12);
    CHECK(*seen.begin() == 0);
    CHECK(*seen.rbegin() == 11);
}

TEST_CASE("compose: K_2[empty_3] is K_{3,3}") {
    Graph p = compose(complete_graph(2), empty_graph(3));
    CHECK(p.num_vertices() == 6);
    CHECK(p.num_edges() == 9);
    // no intra-copy edges: every edge crosses the two copies
    for (const Edge& e : p.edges()) {
        CHECK(e.u < 3);
        CHECK(e.v >= 3);
    }
    CHECK(p.same_structure(complete_bipartite_graph(3, 3)));
}

TEST_CASE("compose: P_3[empty_2] has 6 vertices and 8 edges") {
    Graph p = compose(path_graph(3), empty_graph(2));
    CHECK(p.num_vertices() == 6);
    CHECK(p.num_edges() == 8);
}

TEST_CASE("compose: degree and edge-count identities") {
    std::vector<Graph> gs = {path_graph(3), cycle_graph(4), complete_graph(3),
                             star_graph(4)};
    std::vector<Graph> hs = {empty_graph(2), complete_graph(2), path_graph(4),
                             cycle_graph(4)};
    for (const Graph& g : gs)
        for (const Graph& h : hs) {
            Graph p = compose(g, h);
            const int n = h.num_vertices();
            CHECK(p.num_edges() ==
                  g.num_edges() * n * n + g.num_vertices() * h.num_edges());
            for (int i = 0; i < g.num_vertices(); ++i)
                for (int j = 0; j < n; ++j)
                    CHECK(p.degree(i * n + j) == g.degree(i) * n + h.degree(j));
        }
    // every vertex of C_4[K_2] has degree 2*2 + 1 = 5
    Graph c4k2 = compose(cycle_graph(4), complete_graph(2));
    for (int v = 0; v < c4k2.num_vertices(); ++v) CHECK(c4k2.degree(v) == 5);
}

TEST_CASE("compose: copy i carries an isomorphic image of H") {
    Graph h("h", 4, {{0, 1}, {1, 2}, {1, 3}});
    Graph g = path_graph(3);
    Graph p = compose(g, h);
    for (int i = 0; i < 3; ++i)
        for (const Edge& e : h.edges()) CHECK(p.has_edge(4 * i + e.u, 4 * i + e.v));
    CHECK_THROWS_AS(compose(g, Graph("none", 0, {})), std::invalid_argument);
}

TEST_CASE("generators match their counts") {
    Graph kb = complete_bipartite_graph(2, 3);
    CHECK(kb.num_vertices() == 5);
    CHECK(kb.num_edges() == 6);
    Classification c = classify(kb);
    CHECK(c.is_bipartite);
    CHECK(c.part_a.size() == 2);
    CHECK(c.part_b.size() == 3);

    Graph q3 = hypercube_graph(3);
    CHECK(q3.num_vertices() == 8);
    CHECK(q3.num_edges() == 12);
    Classification cq = classify(q3);
    CHECK(cq.is_regular);
    CHECK(cq.regular_degree == 3);

    Graph k114 = complete_multipartite_graph({1, 1, 4});
    CHECK(k114.num_vertices() == 6);
    CHECK(k114.num_edges() == 9);

    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);
    CHECK_THROWS_AS(generate("nope", {1}, std::nullopt), std::invalid_argument);
    CHECK_THROWS_AS(generate("cycle", {3, 4}, std::nullopt), std::invalid_argument);
}

TEST_CASE("classify on the spec examples") {
    Classification c6 = classify(cycle_graph(6));
    CHECK(c6.is_bipartite);
    CHECK(c6.is_regular);
    CHECK(c6.regular_degree == 2);
    CHECK(c6.is_triangle_free);
    CHECK(c6.max_degree == 2);
    CHECK_FALSE(c6.is_tree);

    Classification k4 = classify(complete_graph(4));
    CHECK_FALSE(k4.is_bipartite);
    CHECK(k4.is_regular);
    CHECK(k4.regular_degree == 3);
    CHECK_FALSE(k4.is_triangle_free);
    CHECK(k4.max_degree == 3);

    Classification s4 = classify(star_graph(4));
    CHECK(s4.is_tree);
    CHECK(s4.is_bipartite);
    CHECK(s4.max_degree == 3);
    CHECK_FALSE(s4.is_regular);
}

TEST_CASE("random trees are uniform-seeded trees") {
    for (int n = 2; n <= 12; ++n)
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Graph t = random_tree(n, seed);
            Classification c = classify(t);
            CHECK(c.is_tree);
            CHECK(t.num_edges() == n - 1);
        }
    CHECK(random_tree(8, 42).edges() == random_tree(8, 42).edges());
    // different seeds give different trees at least somewhere
    bool differs = false;
    for (std::uint64_t s = 0; s < 8 && !differs; ++s)
        differs = !(random_tree(8, s).edges() == random_tree(8, s + 100).edges());
    CHECK(differs);
}
