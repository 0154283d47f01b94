#include "icolor/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <limits>
#include <queue>
#include <stdexcept>
#include <thread>
#include <utility>

namespace icolor {

namespace {

using Clock = std::chrono::steady_clock;

enum class Mode { Interval, IntervalContinuousUse, Proper };

constexpr int kMaxSearchEdges = 62;  // color bitmasks live in one uint64_t

void validate_budget(const SearchBudget& b) {
    if (b.max_edges < 1 || b.max_edges > kMaxSearchEdges)
        throw std::invalid_argument("search budget: max_edges must be in [1," +
                                    std::to_string(kMaxSearchEdges) + "]");
    if (b.max_nodes && *b.max_nodes < 1)
        throw std::invalid_argument("search budget: max_nodes must be positive");
    if (b.time_limit_seconds && *b.time_limit_seconds <= 0)
        throw std::invalid_argument("search budget: time limit must be positive");
    if (b.threads < 0)
        throw std::invalid_argument("search budget: thread count must be positive");
}

// Edges ordered by breadth-first vertex discovery: an edge enters when its
// later endpoint is discovered, so each new edge touches colored ones and
// the window prune bites early.
std::vector<int> bfs_edge_order(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> pos(n, -1);
    int next = 0;
    for (int s = 0; s < n; ++s) {
        if (pos[s] != -1) continue;
        pos[s] = next++;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : g.neighbors(u))
                if (pos[w] == -1) {
                    pos[w] = next++;
                    q.push(w);
                }
        }
    }
    std::vector<int> order(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) order[e] = e;
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto key = [&](int e) {
            int a = pos[g.edge(e).u], b = pos[g.edge(e).v];
            return std::make_pair(std::max(a, b), std::min(a, b));
        };
        return key(x) < key(y);
    });
    return order;
}

struct SharedControl {
    std::atomic<long long> nodes{0};
    long long max_nodes = -1;
    Clock::time_point deadline{};
    bool has_deadline = false;
    std::atomic<bool> out_of_budget{false};
    std::atomic<int> best_branch{std::numeric_limits<int>::max()};
};

struct Searcher {
    const Graph& g;
    int t;
    Mode mode;
    SharedControl& ctl;
    int my_branch;  // root color owned by this worker, 0 = all
    const std::vector<int>& order;
    std::vector<int> ecolor;
    std::vector<std::uint64_t> mask;
    std::vector<int> vmin, vmax, vcnt;
    std::vector<int> used;
    int distinct = 0;
    long long local_nodes = 0;
    bool stopped = false;
    bool budget_stop = false;
    std::vector<int> solution;

    Searcher(const Graph& graph, int colors, Mode m, SharedControl& control,
             const std::vector<int>& edge_order, int branch)
        : g(graph),
          t(colors),
          mode(m),
          ctl(control),
          my_branch(branch),
          order(edge_order),
          ecolor(g.num_edges(), 0),
          mask(g.num_vertices(), 0),
          vmin(g.num_vertices(), 0),
          vmax(g.num_vertices(), 0),
          vcnt(g.num_vertices(), 0),
          used(colors + 1, 0) {}

    // The partial spectrum plus c must still fit a window of size d(v);
    // with 1 <= colors <= t and d(v) <= t that reduces to the span test.
    bool window_ok(int v, int c) const {
        if (vcnt[v] == 0) return true;
        int nm = std::min(vmin[v], c), nx = std::max(vmax[v], c);
        return nx - nm <= g.degree(v) - 1;
    }

    bool keep_going() {
        ++local_nodes;
        if (ctl.max_nodes >= 0) {
            long long total = ctl.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
            if (total > ctl.max_nodes) {
                ctl.out_of_budget.store(true, std::memory_order_relaxed);
                stopped = budget_stop = true;
                return false;
            }
        }
        if (ctl.out_of_budget.load(std::memory_order_relaxed)) {
            stopped = budget_stop = true;
            return false;
        }
        if ((local_nodes & 1023) == 0) {
            if (ctl.has_deadline && Clock::now() >= ctl.deadline) {
                ctl.out_of_budget.store(true, std::memory_order_relaxed);
                stopped = budget_stop = true;
                return false;
            }
            if (my_branch > 0 &&
                ctl.best_branch.load(std::memory_order_relaxed) < my_branch) {
                stopped = true;  // a lexicographically earlier branch already won
                return false;
            }
        }
        return true;
    }

    bool leaf_ok() const {
        if (mode == Mode::Proper) return true;
        if (distinct != t) return false;
        if (mode == Mode::IntervalContinuousUse) {
            std::vector<int> maxima(vmax);
            std::sort(maxima.begin(), maxima.end());
            for (size_t i = 0; i + 1 < maxima.size(); ++i)
                if (maxima[i + 1] - maxima[i] > 1) return false;
        }
        return true;
    }

    bool dfs(size_t p) {
        if (p == order.size()) {
            if (!leaf_ok()) return false;
            solution = ecolor;
            return true;
        }
        if (!keep_going()) return false;
        const int e = order[p];
        const int u = g.edge(e).u, v = g.edge(e).v;
        const int lo = (p == 0 && my_branch > 0) ? my_branch : 1;
        const int hi = (p == 0 && my_branch > 0) ? my_branch : t;
        for (int c = lo; c <= hi; ++c) {
            const std::uint64_t bit = 1ull << (c - 1);
            if ((mask[u] | mask[v]) & bit) continue;
            if (mode != Mode::Proper && (!window_ok(u, c) || !window_ok(v, c))) continue;
            const bool fresh = used[c] == 0;
            if (mode != Mode::Proper &&
                t - (distinct + (fresh ? 1 : 0)) >
                    static_cast<int>(order.size() - p - 1))
                continue;  // not enough edges left to use every color
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
            ++used[c];
            if (fresh) ++distinct;
            ecolor[e] = c;
            if (dfs(p + 1)) return true;
            ecolor[e] = 0;
            if (fresh) --distinct;
            --used[c];
            --vcnt[u];
            --vcnt[v];
            vmin[u] = su0;
            vmax[u] = su1;
            vmin[v] = sv0;
            vmax[v] = sv1;
            mask[u] &= ~bit;
            mask[v] &= ~bit;
            if (stopped) return false;
        }
        return false;
    }
};

struct BranchResult {
    enum { None, Found, Budget, Cancelled, Skipped } status = None;
    std::vector<int> colors;
    long long nodes = 0;
};

// Runs the DFS, splitting the first edge's color choices across workers
// when threads > 1. Reduction scans branches in ascending color order so
// the reported witness is exactly the single-threaded one.
SearchOutcome run_search(const Graph& g, int t, Mode mode, const SearchBudget& b) {
    SharedControl ctl;
    if (b.max_nodes) ctl.max_nodes = *b.max_nodes;
    if (b.time_limit_seconds) {
        ctl.deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                          std::chrono::duration<double>(
                                              *b.time_limit_seconds));
        ctl.has_deadline = true;
    }
    const std::vector<int> order = bfs_edge_order(g);
    const int threads = std::min(search_thread_count(b), t);

    SearchOutcome out;
    if (threads <= 1) {
        Searcher s(g, t, mode, ctl, order, 0);
        bool found = s.dfs(0);
        out.nodes_expanded = s.local_nodes;
        if (found) {
            out.status = SearchStatus::Found;
            out.coloring = EdgeColoring(g, s.solution);
        } else {
            out.status = s.budget_stop ? SearchStatus::BudgetExhausted
                                       : SearchStatus::ProvenNone;
        }
        return out;
    }

    std::vector<BranchResult> results(t + 1);
    std::atomic<int> next{1};
    auto work = [&] {
        for (;;) {
            int branch = next.fetch_add(1, std::memory_order_relaxed);
            if (branch > t) return;
            BranchResult& r = results[branch];
            if (ctl.out_of_budget.load(std::memory_order_relaxed)) {
                r.status = BranchResult::Skipped;
                continue;
            }
            if (ctl.best_branch.load(std::memory_order_relaxed) < branch) {
                r.status = BranchResult::Cancelled;
                continue;
            }
            Searcher s(g, t, mode, ctl, order, branch);
            bool found = s.dfs(0);
            r.nodes = s.local_nodes;
            if (found) {
                r.status = BranchResult::Found;
                r.colors = std::move(s.solution);
                int cur = ctl.best_branch.load(std::memory_order_relaxed);
                while (branch < cur &&
                       !ctl.best_branch.compare_exchange_weak(cur, branch)) {
                }
            } else if (s.budget_stop) {
                r.status = BranchResult::Budget;
            } else if (s.stopped) {
                r.status = BranchResult::Cancelled;
            }
        }
    };
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (int i = 0; i < threads; ++i) pool.emplace_back(work);
    for (auto& th : pool) th.join();

    for (const auto& r : results) out.nodes_expanded += r.nodes;
    for (int c = 1; c <= t; ++c) {
        if (results[c].status == BranchResult::Budget ||
            results[c].status == BranchResult::Skipped) {
            // The lexicographically first witness is undetermined.
            out.status = SearchStatus::BudgetExhausted;
            return out;
        }
        if (results[c].status == BranchResult::Found) {
            out.status = SearchStatus::Found;
            out.coloring = EdgeColoring(g, results[c].colors);
            return out;
        }
    }
    out.status = SearchStatus::ProvenNone;
    return out;
}

bool has_isolated_vertex(const Graph& g) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 0) return true;
    return false;
}

// Remaining budget after spending some of it earlier in a sweep.
SearchBudget drained(const SearchBudget& b, long long nodes_spent,
                     Clock::time_point started, bool* empty) {
    SearchBudget cur = b;
    *empty = false;
    if (cur.max_nodes) {
        long long left = *cur.max_nodes - nodes_spent;
        if (left < 1) {
            *empty = true;
            left = 1;
        }
        cur.max_nodes = left;
    }
    if (cur.time_limit_seconds) {
        double left = *cur.time_limit_seconds -
                      std::chrono::duration<double>(Clock::now() - started).count();
        if (left <= 0) {
            *empty = true;
            left = 1e-9;
        }
        cur.time_limit_seconds = left;
    }
    return cur;
}

}  // namespace

int search_thread_count(const SearchBudget& budget) {
    if (budget.threads > 0) return budget.threads;
    if (const char* env = std::getenv("COLOR_SEARCH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= 256) return static_cast<int>(v);
    }
    return 1;
}

SearchOutcome find_interval_t(const Graph& g, int t, const SearchBudget& budget) {
    validate_budget(budget);
    SearchOutcome out;
    if (g.num_edges() > budget.max_edges) {
        out.status = SearchStatus::BudgetExhausted;
        return out;
    }
    if (t < std::max(g.max_degree(), 1)) return out;  // chi' >= Δ
    if (t > g.num_edges()) return out;                // every color must be used
    if (has_isolated_vertex(g)) return out;  // isolated vertices never verify
    return run_search(g, t, Mode::Interval, budget);
}

BoundsResult bounds(const Graph& g, const SearchBudget& budget) {
    validate_budget(budget);
    BoundsResult res;
    if (g.num_edges() > budget.max_edges) {
        res.complete = false;
        return res;
    }
    const auto started = Clock::now();
    for (int t = std::max(g.max_degree(), 1); t <= g.num_edges(); ++t) {
        bool empty = false;
        SearchBudget cur = drained(budget, res.nodes_expanded, started, &empty);
        if (empty) {
            res.complete = false;
            break;
        }
        SearchOutcome o = find_interval_t(g, t, cur);
        res.nodes_expanded += o.nodes_expanded;
        if (o.status == SearchStatus::Found) {
            res.achievable.push_back(t);
        } else if (o.status == SearchStatus::BudgetExhausted) {
            res.complete = false;
            break;
        }
    }
    if (!res.achievable.empty()) {
        res.interval_colorable = true;
        res.w = res.achievable.front();
        res.W = res.achievable.back();
    }
    return res;
}

SearchOutcome find_continuous_use(const Graph& g, const SearchBudget& budget) {
    validate_budget(budget);
    SearchOutcome out;
    if (g.num_edges() > budget.max_edges) {
        out.status = SearchStatus::BudgetExhausted;
        return out;
    }
    if (has_isolated_vertex(g)) return out;
    const auto started = Clock::now();
    for (int t = std::max(g.max_degree(), 1); t <= g.num_edges(); ++t) {
        bool empty = false;
        SearchBudget cur = drained(budget, out.nodes_expanded, started, &empty);
        if (empty) {
            out.status = SearchStatus::BudgetExhausted;
            return out;
        }
        SearchOutcome o = run_search(g, t, Mode::IntervalContinuousUse, cur);
        out.nodes_expanded += o.nodes_expanded;
        if (o.status == SearchStatus::Found) {
            out.status = SearchStatus::Found;
            out.coloring = std::move(o.coloring);
            return out;
        }
        if (o.status == SearchStatus::BudgetExhausted) {
            out.status = SearchStatus::BudgetExhausted;
            return out;
        }
    }
    return out;
}

ChromaticIndexResult chromatic_index_small(const Graph& g, const SearchBudget& budget) {
    validate_budget(budget);
    ChromaticIndexResult res;
    if (g.num_edges() > budget.max_edges) return res;
    if (g.num_edges() == 0) {
        res.chi = 0;
        return res;
    }
    const auto started = Clock::now();
    for (int k = g.max_degree(); k <= g.max_degree() + 1; ++k) {
        bool empty = false;
        SearchBudget cur = drained(budget, res.nodes_expanded, started, &empty);
        if (empty) return res;
        SearchOutcome o = run_search(g, k, Mode::Proper, cur);
        res.nodes_expanded += o.nodes_expanded;
        if (o.status == SearchStatus::Found) {
            res.chi = k;
            return res;
        }
        if (o.status == SearchStatus::BudgetExhausted) return res;
    }
    return res;  // unreachable: Δ+1 colors always suffice
}

}  // namespace icolor
