#include "icolor/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <random>
#include <stdexcept>
#include <string>

namespace icolor {

Graph::Graph(std::string name, int num_vertices, std::vector<Edge> edges)
    : name_(std::move(name)), n_(num_vertices), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("graph: negative vertex count");
    for (Edge& e : edges_) {
        if (e.u == e.v)
            throw std::invalid_argument("graph: loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("graph: edge (" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + ") out of range");
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph: duplicate edge");
    incident_.assign(n_, {});
    for (int e = 0; e < num_edges(); ++e) {
        incident_[edges_[e].u].push_back(e);
        incident_[edges_[e].v].push_back(e);
    }
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    out.reserve(incident_[v].size());
    for (int e : incident_[v]) out.push_back(edges_[e].u == v ? edges_[e].v : edges_[e].u);
    std::sort(out.begin(), out.end());
    return out;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

int Graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge key{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
    if (it != edges_.end() && *it == key) return static_cast<int>(it - edges_.begin());
    return -1;
}

bool Graph::same_structure(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
}

Graph compose(const Graph& g, const Graph& h) {
    if (h.num_vertices() == 0)
        throw std::invalid_argument("compose: H must have at least one vertex");
    const int m = g.num_vertices();
    const int n = h.num_vertices();
    CompositionIndex idx{m, n};
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(g.num_edges()) * n * n +
                  static_cast<size_t>(m) * h.num_edges());
    for (const Edge& e : g.edges())
        for (int p = 0; p < n; ++p)
            for (int q = 0; q < n; ++q)
                edges.push_back({idx.flat(e.u, p), idx.flat(e.v, q)});
    for (int i = 0; i < m; ++i)
        for (const Edge& e : h.edges())
            edges.push_back({idx.flat(i, e.u), idx.flat(i, e.v)});
    return Graph(g.name() + "[" + h.name() + "]", m * n, std::move(edges));
}

Classification classify(const Graph& g) {
    Classification c;
    const int n = g.num_vertices();
    c.max_degree = g.max_degree();

    // BFS: connectivity and 2-coloring in one pass. The lowest vertex of
    // each component lands in part_a.
    std::vector<int> side(n, -1);
    int components = 0;
    bool bipartite = true;
    for (int s = 0; s < n; ++s) {
        if (side[s] != -1) continue;
        ++components;
        side[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u)) {
                if (side[w] == -1) {
                    side[w] = side[u] ^ 1;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    bipartite = false;
                }
            }
        }
    }
    c.is_connected = components <= 1;
    c.is_tree = c.is_connected && g.num_edges() == n - 1 && n >= 1;
    c.is_bipartite = bipartite;
    if (bipartite) {
        for (int v = 0; v < n; ++v) (side[v] == 0 ? c.part_a : c.part_b).push_back(v);
    }

    c.is_regular = true;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != g.degree(0)) {
            c.is_regular = false;
            break;
        }
    if (c.is_regular) c.regular_degree = n > 0 ? g.degree(0) : 0;

    c.is_triangle_free = true;
    for (const Edge& e : g.edges()) {
        auto nu = g.neighbors(e.u);
        auto nv = g.neighbors(e.v);
        std::vector<int> common;
        std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(),
                              std::back_inserter(common));
        if (!common.empty()) {
            c.is_triangle_free = false;
            break;
        }
    }
    return c;
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Uniform draw from [0, bound) by rejection, so results are identical
// across standard libraries.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace

Graph path_graph(int n) {
    require(n >= 1, "path: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    return Graph("P" + std::to_string(n), n, std::move(e));
}

Graph cycle_graph(int n) {
    require(n >= 3, "cycle: need n >= 3");
    std::vector<Edge> e;
    for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
    e.push_back({0, n - 1});
    return Graph("C" + std::to_string(n), n, std::move(e));
}

Graph complete_graph(int n) {
    require(n >= 1, "complete: need n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.push_back({i, j});
    return Graph("K" + std::to_string(n), n, std::move(e));
}

Graph complete_bipartite_graph(int m, int n) {
    require(m >= 1 && n >= 1, "complete_bipartite: need m,n >= 1");
    std::vector<Edge> e;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) e.push_back({i, m + j});
    return Graph("K" + std::to_string(m) + "," + std::to_string(n), m + n, std::move(e));
}

Graph complete_multipartite_graph(const std::vector<int>& parts) {
    require(parts.size() >= 2, "complete_multipartite: need at least 2 parts");
    int n = 0;
    std::string name = "K";
    std::vector<int> start;
    for (size_t i = 0; i < parts.size(); ++i) {
        require(parts[i] >= 1, "complete_multipartite: part sizes must be >= 1");
        start.push_back(n);
        n += parts[i];
        name += (i ? "," : "") + std::to_string(parts[i]);
    }
    std::vector<Edge> e;
    for (size_t a = 0; a < parts.size(); ++a)
        for (size_t b = a + 1; b < parts.size(); ++b)
            for (int i = 0; i < parts[a]; ++i)
                for (int j = 0; j < parts[b]; ++j)
                    e.push_back({start[a] + i, start[b] + j});
    return Graph(name, n, std::move(e));
}

Graph hypercube_graph(int dim) {
    require(dim >= 1, "hypercube: need dim >= 1");
    require(dim <= 20, "hypercube: dim too large");
    const int n = 1 << dim;
    std::vector<Edge> e;
    for (int u = 0; u < n; ++u)
        for (int b = 0; b < dim; ++b) {
            int w = u ^ (1 << b);
            if (u < w) e.push_back({u, w});
        }
    return Graph("Q" + std::to_string(dim), n, std::move(e));
}

Graph empty_graph(int n) {
    require(n >= 1, "empty: need n >= 1");
    return Graph("empty" + std::to_string(n), n, {});
}

Graph star_graph(int n) {
    require(n >= 2, "star: need n >= 2");
    std::vector<Edge> e;
    for (int i = 1; i < n; ++i) e.push_back({0, i});
    return Graph("star" + std::to_string(n), n, std::move(e));
}

Graph random_tree(int n, std::uint64_t seed) {
    require(n >= 1, "random_tree: need n >= 1");
    std::vector<Edge> edges;
    if (n == 2) {
        edges.push_back({0, 1});
    } else if (n > 2) {
        std::mt19937_64 rng(seed);
        std::vector<int> prufer(n - 2);
        for (int& x : prufer) x = static_cast<int>(uniform_below(rng, n));
        // Smallest-leaf Prüfer decode.
        std::vector<int> deg(n, 1);
        for (int x : prufer) ++deg[x];
        for (int x : prufer) {
            int leaf = 0;
            while (deg[leaf] != 1) ++leaf;
            edges.push_back({leaf, x});
            deg[leaf] = 0;
            --deg[x];
        }
        int a = -1, b = -1;
        for (int v = 0; v < n; ++v)
            if (deg[v] == 1) (a < 0 ? a : b) = v;
        edges.push_back({a, b});
    }
    return Graph("tree" + std::to_string(n) + "_s" + std::to_string(seed), n,
                 std::move(edges));
}

Graph generate(const std::string& family, const std::vector<int>& params,
               std::optional<std::uint64_t> seed) {
    auto arity = [&](size_t k) {
        require(params.size() == k,
                "generate: family '" + family + "' expects " + std::to_string(k) +
                    " parameter(s)");
    };
    if (family == "path") {
        arity(1);
        return path_graph(params[0]);
    }
    if (family == "cycle") {
        arity(1);
        return cycle_graph(params[0]);
    }
    if (family == "complete") {
        arity(1);
        return complete_graph(params[0]);
    }
    if (family == "complete_bipartite") {
        arity(2);
        return complete_bipartite_graph(params[0], params[1]);
    }
    if (family == "complete_multipartite") return complete_multipartite_graph(params);
    if (family == "hypercube") {
        arity(1);
        return hypercube_graph(params[0]);
    }
    if (family == "empty") {
        arity(1);
        return empty_graph(params[0]);
    }
    if (family == "star") {
        arity(1);
        return star_graph(params[0]);
    }
    if (family == "random_tree") {
        arity(1);
        return random_tree(params[0], seed.value_or(0));
    }
    throw std::invalid_argument("generate: unknown family '" + family + "'");
}

}  // namespace icolor
