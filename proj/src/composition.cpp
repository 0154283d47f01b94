#include "icolor/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "icolor/constructions.hpp"

namespace icolor {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

CompositionPlan plan_composition(const Graph& g, const EdgeColoring& alpha_g,
                                 const Graph& h, const EdgeColoring& alpha_h) {
    require(alpha_g.graph.same_structure(g),
            "compose_coloring: G coloring does not match G");
    require(alpha_h.graph.same_structure(h),
            "compose_coloring: H coloring does not match H");
    require(g.num_edges() >= 1,
            "compose_coloring: G must have at least one edge to carry an interval "
            "coloring");
    require(h.num_vertices() >= 1, "compose_coloring: H must have at least one vertex");

    CompositionPlan plan;
    plan.g = g;
    plan.h = h;

    IntervalCertificate cg = verify_interval(alpha_g);
    if (!cg.valid)
        throw std::invalid_argument(
            "compose_coloring: the G coloring is not a valid interval coloring (" +
            cg.violations.front() + ")");
    plan.alpha_g = normalized(alpha_g);
    plan.t = cg.t;

    const int n = h.num_vertices();
    if (h.num_edges() == 0) {
        plan.alpha_h = alpha_h;
        plan.l = ColorSequence(std::vector<int>(n, 0));
        plan.order.resize(n);
        std::iota(plan.order.begin(), plan.order.end(), 0);
    } else {
        IntervalCertificate ch = verify_interval(alpha_h);
        if (!ch.valid)
            throw std::invalid_argument(
                "compose_coloring: the H coloring is not a valid interval coloring (" +
                ch.violations.front() + ")");
        plan.alpha_h = normalized(alpha_h);
        plan.l = use(plan.alpha_h);
        if (!is_continuous(plan.l))
            throw std::invalid_argument(
                "compose_coloring: USE over V(H) is not continuous, so the composite "
                "rules do not apply");
        SpectrumTable sh = spectra(plan.alpha_h);
        plan.order.resize(n);
        std::iota(plan.order.begin(), plan.order.end(), 0);
        std::stable_sort(plan.order.begin(), plan.order.end(),
                         [&](int a, int b) { return sh.max_of(a) < sh.max_of(b); });
    }
    plan.rank_of.assign(n, 0);
    for (int r = 0; r < n; ++r) plan.rank_of[plan.order[r]] = r;
    plan.beta = knn_prescribed_lse(n, shift(plan.l, 1));
    return plan;
}

EdgeColoring apply_plan(const CompositionPlan& plan) {
    const Graph& g = plan.g;
    const Graph& h = plan.h;
    const int n = h.num_vertices();
    Graph gh = compose(g, h);

    SpectrumTable sg = spectra(plan.alpha_g);
    // beta(x_p, y_q) on the canonical K_{n,n}: left p, right n+q (0-based ranks).
    const Graph& bg = plan.beta.graph;
    auto beta_of = [&](int p, int q) {
        return plan.beta.colors[bg.edge_index(p, n + q)];
    };

    std::vector<int> colors(gh.num_edges(), 0);
    for (int e = 0; e < gh.num_edges(); ++e) {
        const Edge& ed = gh.edge(e);
        const int i = ed.u / n, p = ed.u % n;
        const int j = ed.v / n, q = ed.v % n;
        if (i == j) {
            colors[e] = (sg.min_of(i) - 1) * n + plan.alpha_h.color_of(p, q);
        } else {
            colors[e] = (plan.alpha_g.color_of(i, j) - 1) * n +
                        beta_of(plan.rank_of[p], plan.rank_of[q]);
        }
    }
    return EdgeColoring(std::move(gh), std::move(colors));
}

EdgeColoring compose_coloring(const Graph& g, const EdgeColoring& alpha_g,
                              const Graph& h, const EdgeColoring& alpha_h) {
    return apply_plan(plan_composition(g, alpha_g, h, alpha_h));
}

namespace {

struct StrategyPick {
    EdgeColoring alpha_h;
    std::string name;
};

StrategyPick pick_h_coloring(const Graph& h, ComposeStrategy strategy,
                             const std::optional<EdgeColoring>& prescribed_h) {
    Classification cls = classify(h);
    switch (strategy) {
        case ComposeStrategy::Auto: {
            if (h.num_edges() == 0)
                return {EdgeColoring(h, {}), "edgeless"};
            if (has_supported_delta_family(h, cls))
                return {regular_delta_color(h), "regular"};
            if (cls.is_bipartite &&
                h.num_edges() == static_cast<int>(cls.part_a.size() * cls.part_b.size()) &&
                !cls.part_a.empty() && !cls.part_b.empty())
                return {complete_bipartite_color(h), "complete_bipartite"};
            if (cls.is_tree && h.num_edges() >= 1)
                return {tree_continuous_use(h), "tree"};
            throw std::invalid_argument(
                "compose_auto: no continuous-USE coloring known for H; try the search "
                "oracle (find_continuous_use)");
        }
        case ComposeStrategy::Regular:
            return {regular_delta_color(h), "regular"};
        case ComposeStrategy::Edgeless:
            require(h.num_edges() == 0, "compose_auto: H is not edgeless");
            return {EdgeColoring(h, {}), "edgeless"};
        case ComposeStrategy::CompleteBipartite:
            return {complete_bipartite_color(h), "complete_bipartite"};
        case ComposeStrategy::Tree:
            return {tree_continuous_use(h), "tree"};
        case ComposeStrategy::EvenCycle:
            return {even_cycle_color(h), "even_cycle"};
        case ComposeStrategy::K2nMax: {
            require(h.num_vertices() % 2 == 0 && h.num_vertices() >= 2 &&
                        h.num_edges() ==
                            h.num_vertices() * (h.num_vertices() - 1) / 2,
                    "compose_auto: k2n_max needs a complete graph of even order");
            EdgeColoring c = search_k2n_theorem6(h.num_vertices() / 2);
            // Rebind to the caller's H (same structure, possibly another name).
            return {EdgeColoring(h, c.colors), "k2n_max"};
        }
        case ComposeStrategy::Prescribed:
            require(prescribed_h.has_value(),
                    "compose_auto: prescribed strategy needs an H coloring");
            return {*prescribed_h, "prescribed"};
    }
    throw std::invalid_argument("compose_auto: unknown strategy");
}

std::string bound_note(const std::string& strategy, const Graph& h, int t_g, int n,
                       int l_max, int t_out) {
    std::string base = "t_out = " + std::to_string(t_g) + "*" + std::to_string(n) +
                       " + " + std::to_string(l_max) + " = " + std::to_string(t_out);
    if (strategy == "regular")
        return base + "; witnesses W(G[H]) >= W(G)*n + r with r = " +
               std::to_string(l_max);
    if (strategy == "edgeless") return base + "; witnesses W(G[H]) >= W(G)*n";
    if (strategy == "complete_bipartite")
        return base + "; witnesses W(G[H]) >= (W(G)+1)*(m+n) - 1";
    if (strategy == "even_cycle")
        return base + "; witnesses W(G[H]) >= (2*W(G)+1)*" +
               std::to_string(h.num_vertices() / 2) + " + 1";
    if (strategy == "k2n_max")
        return base + "; witnesses W(G[H]) >= (2*W(G)+3)*" +
               std::to_string(h.num_vertices() / 2) + " - 2";
    if (strategy == "tree") return base + "; witnesses that G[T] is interval colorable";
    return base;
}

}  // namespace

ComposeAutoResult compose_auto(const Graph& g, const EdgeColoring& alpha_g,
                               const Graph& h, ComposeStrategy strategy,
                               const std::optional<EdgeColoring>& prescribed_h) {
    StrategyPick pick = pick_h_coloring(h, strategy, prescribed_h);
    CompositionPlan plan = plan_composition(g, alpha_g, h, pick.alpha_h);

    ComposeAutoResult res;
    res.alpha_h = pick.alpha_h;
    res.strategy_used = pick.name;
    res.t_g = plan.t;
    res.n = h.num_vertices();
    res.l_max = plan.l.empty() ? 0 : plan.l.max();
    res.t_out = res.t_g * res.n + res.l_max;
    res.coloring = apply_plan(plan);
    res.bound_witnessed =
        bound_note(pick.name, h, res.t_g, res.n, res.l_max, res.t_out);
    return res;
}

namespace {

// Backtracking for the paired-lower-spectra coloring of K_{2n}: every
// vertex spectrum must be a full window of width 2n-1 inside [1,3n-2]
// with start in [1,n], and each start value must be hit exactly twice.
struct K2nSearcher {
    const Graph& g;
    int n;       // half the order
    int t;       // 3n-2
    int width;   // 2n-1, also every degree
    std::vector<int> colors;  // per canonical edge
    std::vector<std::uint64_t> mask;
    std::vector<int> vmin, vmax, vcnt;

    K2nSearcher(const Graph& graph, int half)
        : g(graph),
          n(half),
          t(3 * half - 2),
          width(2 * half - 1),
          colors(graph.num_edges(), 0),
          mask(graph.num_vertices(), 0),
          vmin(graph.num_vertices(), 0),
          vmax(graph.num_vertices(), 0),
          vcnt(graph.num_vertices(), 0) {}

    // Possible window starts for v given its partial colors.
    std::pair<int, int> start_range(int v) const {
        if (vcnt[v] == 0) return {1, n};
        return {std::max(1, vmax[v] - width + 1), std::min(n, vmin[v])};
    }

    bool template_ok() const {
        for (int i = 1; i <= n; ++i) {
            int possible = 0, forced = 0;
            for (int v = 0; v < g.num_vertices(); ++v) {
                auto [lo, hi] = start_range(v);
                if (lo > hi) return false;
                if (lo <= i && i <= hi) ++possible;
                if (lo == hi && lo == i) ++forced;
            }
            if (possible < 2 || forced > 2) return false;
        }
        return true;
    }

    bool dfs(int e) {
        if (e == g.num_edges()) {
            for (int i = 1; i <= n; ++i) {
                int exact = 0;
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (vmin[v] == i) ++exact;
                if (exact != 2) return false;
            }
            std::uint64_t all = 0;
            for (int v = 0; v < g.num_vertices(); ++v) all |= mask[v];
            return all == (t >= 64 ? ~0ull : (1ull << t) - 1);
        }
        const int u = g.edge(e).u, v = g.edge(e).v;
        for (int c = 1; c <= t; ++c) {
            const std::uint64_t bit = 1ull << (c - 1);
            if ((mask[u] | mask[v]) & bit) continue;
            const int su0 = vmin[u], su1 = vmax[u], sv0 = vmin[v], sv1 = vmax[v];
            mask[u] |= bit;
            mask[v] |= bit;
            if (vcnt[u]++ == 0)
                vmin[u] = vmax[u] = c;
            else {
                vmin[u] = std::min(vmin[u], c);
                vmax[u] = std::max(vmax[u], c);
            }
            if (vcnt[v]++ == 0)
                vmin[v] = vmax[v] = c;
            else {
                vmin[v] = std::min(vmin[v], c);
                vmax[v] = std::max(vmax[v], c);
            }
            if (template_ok()) {
                colors[e] = c;
                if (dfs(e + 1)) return true;
                colors[e] = 0;
            }
            --vcnt[u];
            --vcnt[v];
            vmin[u] = su0;
            vmax[u] = su1;
            vmin[v] = sv0;
            vmax[v] = sv1;
            mask[u] &= ~bit;
            mask[v] &= ~bit;
        }
        return false;
    }
};

}  // namespace

EdgeColoring search_k2n_theorem6(int n, int max_n) {
    require(n >= 1, "search_k2n_theorem6: need n >= 1");
    require(n <= max_n, "search_k2n_theorem6: n = " + std::to_string(n) +
                            " exceeds the search guard (max " +
                            std::to_string(max_n) + ")");
    Graph g = complete_graph(2 * n);
    if (n == 1) return EdgeColoring(std::move(g), {1});
    K2nSearcher s(g, n);
    if (!s.dfs(0))
        throw std::runtime_error(
            "search_k2n_theorem6: exhausted the search without finding the paired "
            "lower-spectrum coloring");
    return EdgeColoring(std::move(g), std::move(s.colors));
}

}  // namespace icolor
