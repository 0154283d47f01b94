#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace icolor {

// Unordered vertex pair, canonically stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;
    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph with a canonical edge order: each pair stored
// with u < v, edge list sorted lexicographically. Colorings are arrays
// parallel to this order. Immutable after construction.
class Graph {
public:
    Graph() = default;
    // Canonicalizes the edge list; rejects loops, duplicate edges and
    // out-of-range vertex ids.
    Graph(std::string name, int num_vertices, std::vector<Edge> edges);

    const std::string& name() const { return name_; }
    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[e]; }

    // Incident edge indices, ascending.
    const std::vector<int>& incident(int v) const { return incident_[v]; }
    // Neighbor ids, ascending.
    std::vector<int> neighbors(int v) const;
    int degree(int v) const { return static_cast<int>(incident_[v].size()); }
    int max_degree() const;

    // Index of the canonical edge {u,v}, or -1 if absent.
    int edge_index(int u, int v) const;
    bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }

    // Equal vertex count and edge list; names are ignored.
    bool same_structure(const Graph& other) const;

private:
    std::string name_;
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
};

// Vertex flattening (i,j) <-> i*n + j for the product G[H], i indexing
// V(G) and j indexing V(H).
struct CompositionIndex {
    int m = 0;
    int n = 0;
    int flat(int i, int j) const { return i * n + j; }
    std::pair<int, int> unflat(int v) const { return {v / n, v % n}; }
};

// Lexicographic product G[H]: copies of H indexed by V(G), all cross
// pairs between copies i and j whenever ij is an edge of G.
Graph compose(const Graph& g, const Graph& h);

struct Classification {
    bool is_connected = false;
    bool is_tree = false;
    bool is_bipartite = false;
    std::vector<int> part_a, part_b;  // filled when bipartite
    bool is_regular = false;
    int regular_degree = -1;          // set when regular
    bool is_triangle_free = false;
    int max_degree = 0;
};

Classification classify(const Graph& g);

// Family generators. Deterministic; random_tree draws a uniform Prüfer
// sequence from the seed.
Graph path_graph(int n);
Graph cycle_graph(int n);  // n >= 3
Graph complete_graph(int n);
Graph complete_bipartite_graph(int m, int n);
Graph complete_multipartite_graph(const std::vector<int>& parts);
Graph hypercube_graph(int dim);
Graph empty_graph(int n);
Graph star_graph(int n);  // K_{1,n-1} on n vertices, center 0
Graph random_tree(int n, std::uint64_t seed);

// Dispatcher used by the CLI. family is one of: path, cycle, complete,
// complete_bipartite, complete_multipartite, hypercube, empty, star,
// random_tree.
Graph generate(const std::string& family, const std::vector<int>& params,
               std::optional<std::uint64_t> seed = std::nullopt);

}  // namespace icolor
