#pragma once

#include <optional>
#include <vector>

#include "icolor/coloring.hpp"
#include "icolor/graph.hpp"

namespace icolor {

// Desk-scale limits. Exceeding a limit yields BudgetExhausted, which is
// never conflated with ProvenNone.
struct SearchBudget {
    int max_edges = 16;                        // refuse larger instances
    std::optional<long long> max_nodes;        // DFS nodes across the call
    std::optional<double> time_limit_seconds;  // wall clock across the call
    int threads = 0;  // 0: use COLOR_SEARCH_THREADS (default 1)
};

enum class SearchStatus { Found, ProvenNone, BudgetExhausted };

struct SearchOutcome {
    SearchStatus status = SearchStatus::ProvenNone;
    std::optional<EdgeColoring> coloring;
    long long nodes_expanded = 0;
};

// Exhaustive search for an interval t-coloring: depth-first over edges
// in breadth-first edge order, colors ascending, pruning any vertex
// whose partial spectrum cannot extend to an interval of size d(v)
// within [1,t]. Deterministic: the first solution in branch order wins,
// also with threads > 1.
SearchOutcome find_interval_t(const Graph& g, int t, const SearchBudget& budget = {});

struct BoundsResult {
    bool complete = true;  // false: some sweep point hit the budget
    bool interval_colorable = false;
    int w = 0;
    int W = 0;
    std::vector<int> achievable;  // ascending
    long long nodes_expanded = 0;
};

// Sweeps t over [max(Δ,1), |E|] (all t colors must be used, so t cannot
// exceed |E|) and reports the full achievable set.
BoundsResult bounds(const Graph& g, const SearchBudget& budget = {});

// First interval coloring, over the same t sweep, whose USE over the
// whole vertex set is continuous; ProvenNone means no interval coloring
// of g at any t has continuous USE.
SearchOutcome find_continuous_use(const Graph& g, const SearchBudget& budget = {});

struct ChromaticIndexResult {
    std::optional<int> chi;  // empty: budget exhausted
    long long nodes_expanded = 0;
};

// Exact chromatic index by trying Δ then Δ+1 proper colorings.
ChromaticIndexResult chromatic_index_small(const Graph& g,
                                           const SearchBudget& budget = {});

// Thread count resolved from the budget or COLOR_SEARCH_THREADS.
int search_thread_count(const SearchBudget& budget);

}  // namespace icolor
