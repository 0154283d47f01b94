#pragma once

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"
#include "icolor/sequence.hpp"

namespace icolor {

// Proper r-coloring of an r-regular bipartite graph with colors
// base_color .. base_color+r-1, by repeated perfect-matching extraction
// (König). Every vertex spectrum equals [base_color, base_color+r-1].
EdgeColoring konig_delta_color(const Graph& g, int base_color);

// Interval coloring of K_{n,n} whose lower spectral edge on both sides
// equals the prescribed continuous sequence L: the two diagonal matching
// rules for the k-1 smallest values, then a König finish with base l_k.
// Yields S(u_i) = S(v_i) = [L(i), L(i)+n-1].
EdgeColoring knn_prescribed_lse(int n, const ColorSequence& l);
// Same construction applied to an arbitrary labeling of K_{n,n}.
EdgeColoring knn_prescribed_lse(const Graph& g, const ColorSequence& l);

// Interval coloring of a tree with min color 1 and continuous USE:
// grown leaf by leaf, the first edge colored |E(T)|, each new leaf edge
// uw colored S̲(w)-1, then shifted so the minimum becomes 1.
EdgeColoring tree_continuous_use(const Graph& t);

// Interval (m+n-1)-coloring of a complete bipartite graph via
// color(u_i v_j) = i+j-1; S(u_i) = [i, i+n-1], S(v_j) = [j, j+m-1].
EdgeColoring complete_bipartite_color(const Graph& g);
EdgeColoring complete_bipartite_color(int m, int n);

// Interval (n+1)-coloring of an even cycle C_{2n} (n >= 2) with
// S(v_i) = S(v_{2n+1-i}) = [i, i+1], so USE = (2,2,3,3,...,n+1,n+1).
EdgeColoring even_cycle_color(const Graph& g);
EdgeColoring even_cycle_color(int two_n);

// Proper Δ-coloring with every spectrum [1, Δ] for the supported regular
// families: complete graphs of even order (round robin), canonically
// labeled hypercubes (dimension index), even cycles (alternation) and
// regular bipartite graphs (König). Throws "class-1 certificate
// unavailable" otherwise.
EdgeColoring regular_delta_color(const Graph& h);

// True when regular_delta_color can handle h (given its classification).
bool has_supported_delta_family(const Graph& h, const Classification& cls);

}  // namespace icolor
