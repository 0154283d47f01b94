#include "icolor/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace icolor {

namespace {

std::string edge_str(const Edge& e) {
    return "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
}

std::string set_str(const std::vector<int>& s) {
    std::string out = "{";
    for (size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
    return out + "}";
}

}  // namespace

EdgeColoring::EdgeColoring(Graph g, std::vector<int> c)
    : graph(std::move(g)), colors(std::move(c)) {
    if (static_cast<int>(colors.size()) != graph.num_edges())
        throw std::invalid_argument("coloring: expected " +
                                    std::to_string(graph.num_edges()) + " colors, got " +
                                    std::to_string(colors.size()));
}

int EdgeColoring::color_of(int u, int v) const {
    int e = graph.edge_index(u, v);
    if (e < 0)
        throw std::invalid_argument("coloring: no edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
    return colors[e];
}

SpectrumTable spectra(const EdgeColoring& c) {
    const Graph& g = c.graph;
    SpectrumTable t;
    t.sets.assign(g.num_vertices(), {});
    for (int v = 0; v < g.num_vertices(); ++v) {
        auto& s = t.sets[v];
        for (int e : g.incident(v)) s.push_back(c.colors[e]);
        std::sort(s.begin(), s.end());
        for (size_t i = 0; i + 1 < s.size(); ++i)
            if (s[i] == s[i + 1]) {
                // Name the clashing pair.
                int ea = -1, eb = -1;
                for (int e : g.incident(v))
                    if (c.colors[e] == s[i]) (ea < 0 ? ea : eb) = e;
                throw std::invalid_argument(
                    "improper coloring: edges " + edge_str(g.edge(ea)) + " and " +
                    edge_str(g.edge(eb)) + " both colored " + std::to_string(s[i]) +
                    " at vertex " + std::to_string(v));
            }
    }
    return t;
}

IntervalCertificate verify_interval(const EdgeColoring& c) {
    const Graph& g = c.graph;
    IntervalCertificate cert;
    cert.windows.assign(g.num_vertices(), {0, 0});

    if (g.num_edges() == 0) {
        cert.valid = true;
        cert.t = 0;
        return cert;
    }

    for (int e = 0; e < g.num_edges(); ++e)
        if (c.colors[e] < 1)
            cert.violations.push_back("edge " + edge_str(g.edge(e)) +
                                      " has nonpositive color " +
                                      std::to_string(c.colors[e]));

    // Properness and per-vertex interval checks; all failures reported.
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> inc;
        for (int e : g.incident(v)) inc.push_back(c.colors[e]);
        std::sort(inc.begin(), inc.end());
        if (inc.empty()) {
            cert.violations.push_back("vertex " + std::to_string(v) +
                                      " is isolated in a non-edgeless graph");
            continue;
        }
        cert.windows[v] = {inc.front(), inc.back()};
        bool proper_here = true;
        for (size_t i = 0; i + 1 < inc.size(); ++i)
            if (inc[i] == inc[i + 1]) {
                proper_here = false;
                int ea = -1, eb = -1;
                for (int e : g.incident(v))
                    if (c.colors[e] == inc[i]) (ea < 0 ? ea : eb) = e;
                cert.violations.push_back("vertex " + std::to_string(v) + ": edges " +
                                          edge_str(g.edge(ea)) + " and " +
                                          edge_str(g.edge(eb)) + " both colored " +
                                          std::to_string(inc[i]));
            }
        if (proper_here && inc.back() - inc.front() + 1 != static_cast<int>(inc.size()))
            cert.violations.push_back("vertex " + std::to_string(v) + ": spectrum " +
                                      set_str(inc) +
                                      " is not an interval of consecutive integers");
    }

    // All colors between the smallest and largest used must appear.
    std::vector<int> used = c.colors;
    std::sort(used.begin(), used.end());
    used.erase(std::unique(used.begin(), used.end()), used.end());
    std::vector<int> missing;
    for (size_t i = 0; i + 1 < used.size(); ++i)
        for (int x = used[i] + 1; x < used[i + 1]; ++x) missing.push_back(x);
    if (!missing.empty())
        cert.violations.push_back("used colors are not consecutive: missing " +
                                  set_str(missing));

    cert.t = used.back() - used.front() + 1;
    cert.valid = cert.violations.empty();
    return cert;
}

namespace {

ColorSequence spectral_sequence(const EdgeColoring& c, const std::vector<int>& vertices,
                                bool lower) {
    const Graph& g = c.graph;
    for (int v : vertices)
        if (v < 0 || v >= g.num_vertices())
            throw std::invalid_argument("spectral sequence: vertex " + std::to_string(v) +
                                        " out of range");
    if (g.num_edges() == 0)
        return ColorSequence(std::vector<int>(vertices.size(), 0));
    SpectrumTable t = spectra(c);
    std::vector<int> vals;
    vals.reserve(vertices.size());
    for (int v : vertices) {
        if (t.at(v).empty())
            throw std::invalid_argument("spectral sequence: vertex " + std::to_string(v) +
                                        " is isolated in a non-edgeless graph");
        vals.push_back(lower ? t.min_of(v) : t.max_of(v));
    }
    return ColorSequence(std::move(vals));
}

std::vector<int> all_vertices(const Graph& g) {
    std::vector<int> v(g.num_vertices());
    for (int i = 0; i < g.num_vertices(); ++i) v[i] = i;
    return v;
}

}  // namespace

ColorSequence lse(const EdgeColoring& c, const std::vector<int>& vertices) {
    return spectral_sequence(c, vertices, true);
}

ColorSequence use(const EdgeColoring& c, const std::vector<int>& vertices) {
    return spectral_sequence(c, vertices, false);
}

ColorSequence lse(const EdgeColoring& c) { return lse(c, all_vertices(c.graph)); }

ColorSequence use(const EdgeColoring& c) { return use(c, all_vertices(c.graph)); }

EdgeColoring shift_coloring(const EdgeColoring& c, int p) {
    if (c.colors.empty() || p == 0) return c;
    int mn = *std::min_element(c.colors.begin(), c.colors.end());
    if (mn + p < 1)
        throw std::invalid_argument("shift_coloring: shift by " + std::to_string(p) +
                                    " drops the minimum color below 1");
    EdgeColoring out = c;
    for (int& x : out.colors) x += p;
    return out;
}

EdgeColoring normalized(const EdgeColoring& c) {
    if (c.colors.empty()) return c;
    int mn = *std::min_element(c.colors.begin(), c.colors.end());
    return shift_coloring(c, 1 - mn);
}

}  // namespace icolor
