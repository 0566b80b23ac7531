#pragma once

#include <vector>

#include "lcb/exact.hpp"
#include "lcb/graph.hpp"

namespace lcb {

using Count = Int;

/// Copies of K_t: in total, through each vertex, and through each edge.
struct CliqueCounts {
    int t = 1;
    Count total = 0;
    std::vector<Count> per_vertex;
    /// Aligned with `edges` (the graph's edges in ascending order).
    std::vector<Edge> edges;
    std::vector<Count> per_edge;

    [[nodiscard]] Count on_edge(Edge e) const;
};

/// Exact tallies. Each K_t is visited once as an increasing vertex tuple;
/// the last vertex is never expanded, only counted off the candidate set.
CliqueCounts count_cliques(const Graph& g, int t);

/// Total only (no tallies).
Count count_cliques_total(const Graph& g, int t);

/// Number of non-empty cliques of every order.
Count count_all_cliques(const Graph& g);

/// N(G, K_t, x): copies of K_t containing x. Computed inside N(x) without relabelling.
Count cliques_through_vertex(const Graph& g, int x, int t);

/// |N(u) ∩ N(v)| for an edge uv; throws GraphError when e is not an edge.
int common_neighbors(const Graph& g, Edge e);

namespace slow {

inline constexpr int kNaiveCliqueCap = 10;

/// Tests every t-subset for completeness. Refuses graphs above kNaiveCliqueCap.
Count naive_count_cliques(const Graph& g, int t);

}  // namespace slow

}  // namespace lcb
