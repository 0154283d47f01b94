#pragma once

#include <random>
#include <vector>

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"

namespace icolor::testing {

// The 5-vertex graph with an interval coloring whose lower spectral edge
// is (1,1,2,2,4) and upper spectral edge (2,2,3,4,4): vertices A..E as
// 0..4, colored edges AB=1, AC=2, BD=2, CD=3, DE=4.
inline Graph fig1_graph() {
    return Graph("H5", 5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
}

inline EdgeColoring fig1_coloring() {
    Graph g = fig1_graph();
    // canonical edge order: (0,1) (0,2) (1,3) (2,3) (3,4)
    return EdgeColoring(std::move(g), {1, 2, 2, 3, 4});
}

inline Graph petersen_graph() {
    // outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5
    std::vector<Edge> e;
    for (int i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5});
        e.push_back({5 + i, 5 + (i + 2) % 5});
        e.push_back({i, i + 5});
    }
    return Graph("petersen", 10, std::move(e));
}

// Greedy proper coloring, for property tests that only need properness.
inline EdgeColoring greedy_proper_coloring(const Graph& g) {
    std::vector<int> colors(g.num_edges(), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        int c = 1;
        for (bool clash = true; clash; ++c) {
            clash = false;
            for (int v : {g.edge(e).u, g.edge(e).v})
                for (int f : g.incident(v))
                    if (f != e && colors[f] == c) clash = true;
            if (!clash) {
                colors[e] = c;
                break;
            }
        }
    }
    return EdgeColoring(g, std::move(colors));
}

}  // namespace icolor::testing
