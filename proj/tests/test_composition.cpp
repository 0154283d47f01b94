#include <doctest.h>

#include "helpers.hpp"
#include "icolor/composition.hpp"
#include "icolor/constructions.hpp"

using namespace icolor;
using icolor::testing::fig1_coloring;
using icolor::testing::fig1_graph;

namespace {

// The two per-vertex identities of the composite construction:
//   S̄(v_j^(i)) = S̄(u_i)·n + L(j)
//   S̲(v_j^(i)) = (S̲(u_i)-1)·n + L(j) - d_H(w_j) + 1
void check_spectrum_identities(const Graph& g, const EdgeColoring& alpha_g,
                               const Graph& h, const EdgeColoring& alpha_h,
                               const EdgeColoring& composed) {
    CompositionPlan plan = plan_composition(g, alpha_g, h, alpha_h);
    SpectrumTable sg = spectra(plan.alpha_g);
    SpectrumTable sc = spectra(composed);
    const int n = h.num_vertices();
    for (int i = 0; i < g.num_vertices(); ++i)
        for (int p = 0; p < n; ++p) {
            int rank = plan.rank_of[p];
            int lj = plan.l[rank];
            int flat = i * n + p;
            CHECK(sc.max_of(flat) == sg.max_of(i) * n + lj);
            CHECK(sc.min_of(flat) == (sg.min_of(i) - 1) * n + lj - h.degree(p) + 1);
            // degree consistency: window width is the composed degree
            CHECK(sc.max_of(flat) - sc.min_of(flat) + 1 ==
                  g.degree(i) * n + h.degree(p));
        }
}

}  // namespace

TEST_CASE("compose_coloring: K_2 over edgeless pair gives a 2-coloring of K_{2,2}") {
    Graph g = complete_graph(2);
    EdgeColoring ag(g, {1});
    Graph h = empty_graph(2);
    EdgeColoring ah(h, {});
    EdgeColoring out = compose_coloring(g, ag, h, ah);
    IntervalCertificate cert = verify_interval(out);
    CHECK(cert.valid);
    CHECK(cert.t == 2);
    CHECK(out.graph.num_edges() == 4);
    check_spectrum_identities(g, ag, h, ah, out);
}

TEST_CASE("compose_coloring: P_3 over the five-vertex example gives t = 14") {
    Graph g = path_graph(3);
    EdgeColoring ag(g, {1, 2});
    REQUIRE(verify_interval(ag).t == 2);
    Graph h = fig1_graph();
    EdgeColoring ah = fig1_coloring();
    REQUIRE(use(ah) == ColorSequence({2, 2, 3, 4, 4}));
    EdgeColoring out = compose_coloring(g, ag, h, ah);
    IntervalCertificate cert = verify_interval(out);
    CHECK(cert.valid);
    CHECK(cert.t == 2 * 5 + 4);
    check_spectrum_identities(g, ag, h, ah, out);
}

TEST_CASE("compose_coloring: K_2 over the delta-colored K_4 gives a 7-coloring of "
          "K_8") {
    Graph g = complete_graph(2);
    EdgeColoring ag(g, {1});
    Graph h = complete_graph(4);
    EdgeColoring ah = regular_delta_color(h);
    EdgeColoring out = compose_coloring(g, ag, h, ah);
    CHECK(out.graph.same_structure(complete_graph(8)));
    IntervalCertificate cert = verify_interval(out);
    CHECK(cert.valid);
    CHECK(cert.t == 1 * 4 + 3);
    check_spectrum_identities(g, ag, h, ah, out);
}

TEST_CASE("compose_coloring: precondition failures") {
    Graph g = path_graph(3);
    EdgeColoring ag(g, {1, 2});
    // mismatched coloring/graph pair
    CHECK_THROWS_AS(compose_coloring(g, ag, complete_graph(2), ag),
                    std::invalid_argument);
    // invalid G coloring
    EdgeColoring bad(g, {1, 1});
    CHECK_THROWS_AS(compose_coloring(g, bad, complete_graph(2),
                                     EdgeColoring(complete_graph(2), {1})),
                    std::invalid_argument);
    // valid interval coloring of K_{1,1,4} whose USE (2,2,5,5,5,5) has a gap
    Graph k114 = complete_multipartite_graph({1, 1, 4});
    EdgeColoring ah(k114, {3, 1, 2, 4, 5, 2, 1, 5, 4});
    REQUIRE(verify_interval(ah).valid);
    REQUIRE_FALSE(is_continuous(use(ah)));
    CHECK_THROWS_AS(compose_coloring(g, ag, k114, ah), std::invalid_argument);
    // edgeless G never carries an interval coloring
    CHECK_THROWS_AS(compose_coloring(empty_graph(2), EdgeColoring(empty_graph(2), {}),
                                     complete_graph(2),
                                     EdgeColoring(complete_graph(2), {1})),
                    std::invalid_argument);
}

TEST_CASE("compose_auto: strategies and reported bounds") {
    Graph g = path_graph(3);
    EdgeColoring ag(g, {1, 2});

    SUBCASE("regular H") {
        ComposeAutoResult r =
            compose_auto(g, ag, complete_graph(4), ComposeStrategy::Auto);
        CHECK(r.strategy_used == "regular");
        CHECK(r.t_out == 2 * 4 + 3);
        CHECK(verify_interval(r.coloring).t == r.t_out);
    }
    SUBCASE("edgeless H") {
        ComposeAutoResult r =
            compose_auto(g, ag, empty_graph(3), ComposeStrategy::Auto);
        CHECK(r.strategy_used == "edgeless");
        CHECK(r.t_out == 2 * 3 + 0);
        CHECK(verify_interval(r.coloring).t == r.t_out);
    }
    SUBCASE("complete bipartite H witnesses (t+1)(m+n)-1") {
        ComposeAutoResult r = compose_auto(g, ag, complete_bipartite_graph(2, 3),
                                           ComposeStrategy::Auto);
        CHECK(r.strategy_used == "complete_bipartite");
        CHECK(r.t_out == 2 * 5 + 4);
        CHECK(r.t_out == (2 + 1) * (2 + 3) - 1);
        CHECK(verify_interval(r.coloring).t == r.t_out);
    }
    SUBCASE("tree H") {
        // P_4 is a tree and not complete bipartite, so auto lands on the
        // tree route; a star is complete bipartite and goes there first
        ComposeAutoResult r = compose_auto(g, ag, path_graph(4), ComposeStrategy::Auto);
        CHECK(r.strategy_used == "tree");
        CHECK(r.t_out == 2 * 4 + 3);
        CHECK(verify_interval(r.coloring).t == r.t_out);
        ComposeAutoResult s =
            compose_auto(g, ag, star_graph(4), ComposeStrategy::Auto);
        CHECK(s.strategy_used == "complete_bipartite");
        ComposeAutoResult st =
            compose_auto(g, ag, star_graph(4), ComposeStrategy::Tree);
        CHECK(st.strategy_used == "tree");
        CHECK(verify_interval(st.coloring).valid);
    }
    SUBCASE("even cycle H witnesses (2t+1)n + 1") {
        ComposeAutoResult r =
            compose_auto(g, ag, cycle_graph(6), ComposeStrategy::EvenCycle);
        CHECK(r.t_out == 2 * 6 + 4);
        CHECK(r.t_out == (2 * 2 + 1) * 3 + 1);
        CHECK(verify_interval(r.coloring).t == r.t_out);
    }
    SUBCASE("auto prefers the regular route for even cycles") {
        ComposeAutoResult r =
            compose_auto(g, ag, cycle_graph(6), ComposeStrategy::Auto);
        CHECK(r.strategy_used == "regular");
        CHECK(r.t_out == 2 * 6 + 2);
    }
    SUBCASE("prescribed H coloring") {
        ComposeAutoResult r = compose_auto(g, ag, fig1_graph(),
                                           ComposeStrategy::Prescribed,
                                           fig1_coloring());
        CHECK(r.t_out == 14);
        CHECK(verify_interval(r.coloring).t == 14);
    }
    SUBCASE("no strategy applies") {
        CHECK_THROWS_AS(compose_auto(g, ag, icolor::testing::petersen_graph(),
                                     ComposeStrategy::Auto),
                        std::invalid_argument);
    }
}

TEST_CASE("search_k2n_theorem6: small witnesses") {
    EdgeColoring k2 = search_k2n_theorem6(1);
    CHECK(k2.colors == std::vector<int>{1});

    // n=2: the hand-verifiable K_4 witness
    EdgeColoring k4 = search_k2n_theorem6(2);
    CHECK(k4.colors == std::vector<int>{1, 2, 3, 3, 2, 4});
    IntervalCertificate c4 = verify_interval(k4);
    CHECK(c4.valid);
    CHECK(c4.t == 4);
    SpectrumTable t4 = spectra(k4);
    std::vector<int> lows;
    for (int v = 0; v < 4; ++v) lows.push_back(t4.min_of(v));
    std::sort(lows.begin(), lows.end());
    CHECK(lows == std::vector<int>{1, 1, 2, 2});

    // n=3: t = 7, lower spectra (1,1,2,2,3,3)
    EdgeColoring k6 = search_k2n_theorem6(3);
    IntervalCertificate c6 = verify_interval(k6);
    CHECK(c6.valid);
    CHECK(c6.t == 7);
    CHECK(lse(k6) == ColorSequence({1, 1, 2, 2, 3, 3}));
    CHECK(use(k6) == ColorSequence({5, 5, 6, 6, 7, 7}));
    CHECK(is_continuous(use(k6)));

    CHECK_THROWS_AS(search_k2n_theorem6(5), std::invalid_argument);  // guard
}

TEST_CASE("compose_auto: k2n_max strategy yields the K_8 witness") {
    Graph g = complete_graph(2);
    EdgeColoring ag(g, {1});
    ComposeAutoResult r =
        compose_auto(g, ag, complete_graph(4), ComposeStrategy::K2nMax);
    CHECK(r.strategy_used == "k2n_max");
    CHECK(r.t_out == 1 * 4 + 4);
    CHECK(r.t_out == (2 * 1 + 3) * 2 - 2);
    IntervalCertificate cert = verify_interval(r.coloring);
    CHECK(cert.valid);
    CHECK(cert.t == 8);
    CHECK(r.coloring.graph.same_structure(complete_graph(8)));
}

TEST_CASE("composition plan: ordering is consistent with spectrum maxima") {
    Graph h = fig1_graph();
    CompositionPlan plan =
        plan_composition(path_graph(3), EdgeColoring(path_graph(3), {1, 2}), h,
                         fig1_coloring());
    CHECK(is_continuous(plan.l));
    CHECK(plan.l.size() == h.num_vertices());
    SpectrumTable sh = spectra(plan.alpha_h);
    for (int r = 0; r < h.num_vertices(); ++r)
        CHECK(sh.max_of(plan.order[r]) == plan.l[r]);
}
