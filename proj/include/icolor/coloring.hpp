#pragma once

#include <string>
#include <utility>
#include <vector>

#include "icolor/graph.hpp"
#include "icolor/sequence.hpp"

namespace icolor {

// Edge coloring, colors parallel to the canonical edge list. Finished
// colorings use positive colors; properness is a checked property, not
// a construction invariant, so invalid colorings can be represented and
// diagnosed.
struct EdgeColoring {
    Graph graph;
    std::vector<int> colors;

    EdgeColoring() = default;
    EdgeColoring(Graph g, std::vector<int> c);

    int color_of(int u, int v) const;  // throws if {u,v} is not an edge
};

// Per-vertex sorted color sets with the S̲/S̄ accessors. Empty spectra
// report 0 (the edgeless-graph convention).
struct SpectrumTable {
    std::vector<std::vector<int>> sets;

    const std::vector<int>& at(int v) const { return sets[v]; }
    int min_of(int v) const { return sets[v].empty() ? 0 : sets[v].front(); }
    int max_of(int v) const { return sets[v].empty() ? 0 : sets[v].back(); }
};

// Spectra of a proper coloring. Throws on a properness violation,
// naming the two clashing edges.
SpectrumTable spectra(const EdgeColoring& c);

struct IntervalCertificate {
    bool valid = false;
    // Number of colors after relabeling so the smallest used color is 1;
    // 0 for an edgeless graph.
    int t = 0;
    std::vector<std::string> violations;
    // Per-vertex [S̲,S̄] in raw (stored) colors; [0,0] for empty spectra.
    std::vector<std::pair<int, int>> windows;
};

// The universal validator: properness, per-vertex consecutive spectra,
// gap-free color usage. Invalidity is a result, not an error.
IntervalCertificate verify_interval(const EdgeColoring& c);

// Sorted per-vertex spectrum minima (lse) / maxima (use) over the given
// vertices. On an edgeless graph both are all-zero; otherwise isolated
// vertices are rejected.
ColorSequence lse(const EdgeColoring& c, const std::vector<int>& vertices);
ColorSequence use(const EdgeColoring& c, const std::vector<int>& vertices);
ColorSequence lse(const EdgeColoring& c);
ColorSequence use(const EdgeColoring& c);

// Elementwise color shift; the shifted minimum must stay >= 1.
EdgeColoring shift_coloring(const EdgeColoring& c, int p);

// Colors relabeled so the smallest becomes 1.
EdgeColoring normalized(const EdgeColoring& c);

}  // namespace icolor
