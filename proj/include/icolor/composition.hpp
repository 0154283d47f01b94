#pragma once

#include <optional>
#include <string>
#include <vector>

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"
#include "icolor/sequence.hpp"

namespace icolor {

// Everything the composite coloring rules need from the two inputs.
// alpha_g and alpha_h are normalized to start at color 1; l is
// USE(V(H), alpha_h) (all zeros when H is edgeless); order sorts the H
// vertices by spectrum maximum (ties by id) so that S̄(order[j]) = l[j];
// beta colors the canonical K_{n,n} with lower spectral edge l ⊕ 1 on
// both sides.
struct CompositionPlan {
    Graph g, h;
    EdgeColoring alpha_g, alpha_h;
    int t = 0;  // colors used by alpha_g
    ColorSequence l;
    std::vector<int> order;
    std::vector<int> rank_of;
    EdgeColoring beta;
};

CompositionPlan plan_composition(const Graph& g, const EdgeColoring& alpha_g,
                                 const Graph& h, const EdgeColoring& alpha_h);

// The composite interval coloring of G[H]: a copy-i H-edge w_p w_q gets
// (S̲(u_i)-1)*n + alpha_H(w_p w_q); a cross edge between copies i < j
// gets (alpha_G(u_i u_j)-1)*n + beta(x_p y_q), ranks taken in the sorted
// order. Uses exactly t*n + max(l) colors.
EdgeColoring apply_plan(const CompositionPlan& plan);

// plan + apply in one step. H edgeless is allowed (alpha_h then has no
// colors); otherwise alpha_h must be a valid interval coloring with
// continuous USE over V(H).
EdgeColoring compose_coloring(const Graph& g, const EdgeColoring& alpha_g,
                              const Graph& h, const EdgeColoring& alpha_h);

enum class ComposeStrategy {
    Auto,
    Regular,
    Edgeless,
    CompleteBipartite,
    Tree,
    EvenCycle,
    K2nMax,
    Prescribed,
};

struct ComposeAutoResult {
    EdgeColoring coloring;  // of compose(g, h)
    EdgeColoring alpha_h;   // the H coloring that was used
    std::string strategy_used;
    int t_g = 0;
    int n = 0;
    int l_max = 0;
    int t_out = 0;  // t_g * n + l_max
    std::string bound_witnessed;
};

// Picks or constructs a continuous-USE coloring of H (Auto tries
// edgeless, then the supported regular families, then complete
// bipartite, then tree) and delegates to compose_coloring. Prescribed
// uses the caller-supplied H coloring.
ComposeAutoResult compose_auto(const Graph& g, const EdgeColoring& alpha_g,
                               const Graph& h, ComposeStrategy strategy,
                               const std::optional<EdgeColoring>& prescribed_h = {});

// Interval (3n-2)-coloring of K_{2n} in which every lower spectrum value
// i in [1,n] is taken by exactly two vertices, found by backtracking
// with the spectrum template as a pruning constraint. Guarded: refuses
// n > max_n.
EdgeColoring search_k2n_theorem6(int n, int max_n = 4);

}  // namespace icolor
