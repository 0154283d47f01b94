#include "icolor/constructions.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace icolor {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

// Kuhn augmenting-path matching over the still-uncolored edges.
// matched_right[b] holds the edge index matching right vertex b.
struct MatchingPeeler {
    const Graph& g;
    const std::vector<int>& left;
    const std::vector<char>& is_left;
    std::vector<char> alive;
    std::vector<int> matched_right;  // by vertex id, -1 when free
    std::vector<char> visited;

    MatchingPeeler(const Graph& graph, const std::vector<int>& left_part,
                   const std::vector<char>& side)
        : g(graph),
          left(left_part),
          is_left(side),
          alive(graph.num_edges(), 1),
          matched_right(graph.num_vertices(), -1),
          visited(graph.num_vertices(), 0) {}

    bool augment(int u) {
        for (int e : g.incident(u)) {
            if (!alive[e]) continue;
            int b = g.edge(e).u == u ? g.edge(e).v : g.edge(e).u;
            if (visited[b]) continue;
            visited[b] = 1;
            int other = matched_right[b];
            if (other == -1 ||
                augment(g.edge(other).u == b ? g.edge(other).v : g.edge(other).u)) {
                matched_right[b] = e;
                return true;
            }
        }
        return false;
    }

    // Extracts one perfect matching and returns its edge indices.
    std::vector<int> peel() {
        std::fill(matched_right.begin(), matched_right.end(), -1);
        for (int u : left) {
            std::fill(visited.begin(), visited.end(), 0);
            if (!augment(u))
                throw std::runtime_error(
                    "matching peel: no perfect matching in a regular bipartite graph");
        }
        std::vector<int> edges;
        for (int b = 0; b < g.num_vertices(); ++b)
            if (!is_left[b] && matched_right[b] >= 0) {
                edges.push_back(matched_right[b]);
                alive[matched_right[b]] = 0;
            }
        return edges;
    }
};

}  // namespace

EdgeColoring konig_delta_color(const Graph& g, int base_color) {
    require(base_color >= 1, "konig_delta_color: base color must be positive");
    Classification cls = classify(g);
    require(cls.is_bipartite, "konig_delta_color: graph is not bipartite");
    require(cls.is_regular, "konig_delta_color: graph is not regular");
    const int r = cls.regular_degree;
    std::vector<int> colors(g.num_edges(), 0);
    if (r == 0) return EdgeColoring(g, std::move(colors));

    std::vector<char> is_left(g.num_vertices(), 0);
    for (int v : cls.part_a) is_left[v] = 1;
    MatchingPeeler peeler(g, cls.part_a, is_left);
    for (int round = 0; round < r; ++round)
        for (int e : peeler.peel()) colors[e] = base_color + round;
    return EdgeColoring(g, std::move(colors));
}

EdgeColoring knn_prescribed_lse(int n, const ColorSequence& l) {
    require(n >= 1, "knn_prescribed_lse: need n >= 1");
    return knn_prescribed_lse(complete_bipartite_graph(n, n), l);
}

EdgeColoring knn_prescribed_lse(const Graph& g, const ColorSequence& l) {
    Classification cls = classify(g);
    require(cls.is_bipartite, "knn_prescribed_lse: graph is not bipartite");
    const int n = static_cast<int>(cls.part_a.size());
    require(n >= 1 && cls.part_a.size() == cls.part_b.size() &&
                g.num_edges() == n * n,
            "knn_prescribed_lse: graph is not a complete bipartite K_{n,n}");
    require(l.size() == n, "knn_prescribed_lse: |L| must equal n");
    require(l.min() >= 1, "knn_prescribed_lse: L must start at 1 or above");
    require(is_continuous(l), "knn_prescribed_lse: L must be continuous");

    // u_p = part_a[p-1], v_q = part_b[q-1] (ascending ids).
    auto edge_of = [&](int p, int q) {
        return g.edge_index(cls.part_a[p - 1], cls.part_b[q - 1]);
    };

    // Distinct values l_1 < ... < l_k and their multiplicities.
    std::vector<int> distinct, mult;
    for (int i = 0; i < l.size(); ++i) {
        if (distinct.empty() || l[i] != distinct.back()) {
            distinct.push_back(l[i]);
            mult.push_back(1);
        } else {
            ++mult.back();
        }
    }
    const int k = static_cast<int>(distinct.size());

    std::vector<int> colors(g.num_edges(), 0);
    int run = 0;
    for (int d = 0; d + 1 < k; ++d) {
        run += mult[d];
        // Diagonal p+q = 1 + run gets l_i; diagonal p+q = n+1+run gets l_i+n.
        for (int p = 1; p <= n; ++p) {
            int q = 1 + run - p;
            if (q >= 1 && q <= n) colors[edge_of(p, q)] = distinct[d];
            q = n + 1 + run - p;
            if (q >= 1 && q <= n) colors[edge_of(p, q)] = distinct[d] + n;
        }
    }

    // The uncolored remainder is (n-k+1)-regular bipartite; König finish
    // with colors l_k .. l_k+n-k.
    std::vector<Edge> rest;
    for (int e = 0; e < g.num_edges(); ++e)
        if (colors[e] == 0) rest.push_back(g.edge(e));
    Graph remainder("remainder", g.num_vertices(), std::move(rest));
    EdgeColoring finish = konig_delta_color(remainder, distinct[k - 1]);
    for (int e = 0; e < remainder.num_edges(); ++e) {
        const Edge& re = remainder.edge(e);
        colors[g.edge_index(re.u, re.v)] = finish.colors[e];
    }
    return EdgeColoring(g, std::move(colors));
}

EdgeColoring tree_continuous_use(const Graph& t) {
    Classification cls = classify(t);
    require(cls.is_tree, "tree_continuous_use: graph is not a tree");
    require(t.num_edges() >= 1, "tree_continuous_use: tree must have an edge");

    const int root = 0;
    std::vector<int> colors(t.num_edges(), 0);
    std::vector<char> present(t.num_vertices(), 0);
    // Current spectrum minimum per present vertex.
    std::vector<int> low(t.num_vertices(), 0);

    int first = t.neighbors(root).front();
    int c0 = t.num_edges();
    colors[t.edge_index(root, first)] = c0;
    present[root] = present[first] = 1;
    low[root] = low[first] = c0;

    // Leaves attach in breadth-first discovery order, lowest id first;
    // each new edge xw takes S̲(x)-1 at the attachment vertex x.
    std::queue<int> bfs;
    bfs.push(root);
    bfs.push(first);
    while (!bfs.empty()) {
        int x = bfs.front();
        bfs.pop();
        for (int y : t.neighbors(x)) {
            if (present[y]) continue;
            int c = low[x] - 1;
            colors[t.edge_index(x, y)] = c;
            low[x] = c;
            low[y] = c;
            present[y] = 1;
            bfs.push(y);
        }
    }

    int a = *std::min_element(colors.begin(), colors.end());
    for (int& c : colors) c += 1 - a;
    return EdgeColoring(t, std::move(colors));
}

EdgeColoring complete_bipartite_color(const Graph& g) {
    Classification cls = classify(g);
    require(cls.is_bipartite, "complete_bipartite_color: graph is not bipartite");
    const int m = static_cast<int>(cls.part_a.size());
    const int n = static_cast<int>(cls.part_b.size());
    require(m >= 1 && n >= 1 && g.num_edges() == m * n,
            "complete_bipartite_color: graph is not a complete bipartite K_{m,n}");
    std::vector<int> colors(g.num_edges(), 0);
    for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= n; ++j)
            colors[g.edge_index(cls.part_a[i - 1], cls.part_b[j - 1])] = i + j - 1;
    return EdgeColoring(g, std::move(colors));
}

EdgeColoring complete_bipartite_color(int m, int n) {
    return complete_bipartite_color(complete_bipartite_graph(m, n));
}

namespace {

// Cycle order v_1, v_2, ..., starting at vertex 0 toward its smaller
// neighbor. Caller guarantees a connected 2-regular graph.
std::vector<int> cycle_walk(const Graph& g) {
    std::vector<int> walk;
    walk.reserve(g.num_vertices());
    walk.push_back(0);
    walk.push_back(g.neighbors(0).front());
    while (static_cast<int>(walk.size()) < g.num_vertices()) {
        int cur = walk.back(), prev = walk[walk.size() - 2];
        for (int y : g.neighbors(cur))
            if (y != prev) {
                walk.push_back(y);
                break;
            }
    }
    return walk;
}

}  // namespace

EdgeColoring even_cycle_color(const Graph& g) {
    Classification cls = classify(g);
    require(cls.is_connected && cls.is_regular && cls.regular_degree == 2,
            "even_cycle_color: graph is not a cycle");
    require(g.num_vertices() % 2 == 0,
            "even_cycle_color: odd cycles are class 2 and unsupported");
    const int n = g.num_vertices() / 2;
    require(n >= 2, "even_cycle_color: need C_{2n} with n >= 2");

    std::vector<int> v = cycle_walk(g);  // v[i] is the paper's v_{i+1}
    std::vector<int> colors(g.num_edges(), 0);
    colors[g.edge_index(v[0], v[2 * n - 1])] = 1;
    for (int i = 1; i <= n; ++i) {
        colors[g.edge_index(v[i - 1], v[i])] = i + 1;
        colors[g.edge_index(v[2 * n - i], v[2 * n - i - 1])] = i + 1;
    }
    return EdgeColoring(g, std::move(colors));
}

EdgeColoring even_cycle_color(int two_n) { return even_cycle_color(cycle_graph(two_n)); }

namespace {

bool is_even_complete(const Graph& g, const Classification& cls) {
    int n = g.num_vertices();
    return n >= 2 && n % 2 == 0 && cls.is_regular && cls.regular_degree == n - 1;
}

// Canonically labeled hypercube: 2^d vertices, every edge flips one bit.
bool is_canonical_hypercube(const Graph& g, int* dim_out) {
    int n = g.num_vertices();
    if (n < 2 || (n & (n - 1)) != 0) return false;
    int d = 0;
    while ((1 << d) < n) ++d;
    if (g.num_edges() != d * (n / 2)) return false;
    for (const Edge& e : g.edges()) {
        int x = e.u ^ e.v;
        if ((x & (x - 1)) != 0) return false;
    }
    *dim_out = d;
    return true;
}

bool is_even_cycle(const Graph& g, const Classification& cls) {
    return cls.is_connected && cls.is_regular && cls.regular_degree == 2 &&
           g.num_vertices() % 2 == 0;
}

// Circle-method 1-factorization of K_{2n}: vertex 2n-1 is the hub, round
// rd pairs it with rd and matches (rd+j, rd-j) mod 2n-1 otherwise.
EdgeColoring round_robin_color(const Graph& g) {
    const int n = g.num_vertices();
    const int rounds = n - 1;
    std::vector<int> colors(g.num_edges(), 0);
    for (int rd = 0; rd < rounds; ++rd) {
        colors[g.edge_index(n - 1, rd)] = rd + 1;
        for (int j = 1; j <= (n - 2) / 2; ++j) {
            int a = (rd + j) % rounds;
            int b = (rd - j + rounds) % rounds;
            colors[g.edge_index(a, b)] = rd + 1;
        }
    }
    return EdgeColoring(g, std::move(colors));
}

}  // namespace

bool has_supported_delta_family(const Graph& h, const Classification& cls) {
    if (!cls.is_regular || cls.regular_degree == 0) return false;
    int d = 0;
    return is_even_complete(h, cls) || is_canonical_hypercube(h, &d) ||
           is_even_cycle(h, cls) || cls.is_bipartite;
}

EdgeColoring regular_delta_color(const Graph& h) {
    Classification cls = classify(h);
    require(cls.is_regular, "regular_delta_color: graph is not regular");
    require(cls.regular_degree >= 1, "regular_delta_color: graph has no edges");

    if (is_even_complete(h, cls)) return round_robin_color(h);

    int dim = 0;
    if (is_canonical_hypercube(h, &dim)) {
        std::vector<int> colors(h.num_edges(), 0);
        for (int e = 0; e < h.num_edges(); ++e) {
            int x = h.edge(e).u ^ h.edge(e).v;
            int bit = 0;
            while ((1 << bit) != x) ++bit;
            colors[e] = bit + 1;
        }
        return EdgeColoring(h, std::move(colors));
    }

    if (is_even_cycle(h, cls)) {
        std::vector<int> v = cycle_walk(h);
        std::vector<int> colors(h.num_edges(), 0);
        const int len = h.num_vertices();
        for (int i = 0; i < len; ++i)
            colors[h.edge_index(v[i], v[(i + 1) % len])] = 1 + i % 2;
        return EdgeColoring(h, std::move(colors));
    }

    if (cls.is_bipartite) return konig_delta_color(h, 1);

    throw std::invalid_argument(
        "regular_delta_color: class-1 certificate unavailable for this graph; "
        "use the search oracle (find_interval_t / bounds)");
}

}  // namespace icolor
