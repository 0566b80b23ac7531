#pragma once

#include <vector>

#include "lcb/graph.hpp"

namespace lcb {

/// Default vertex limit for the exact path/cycle searches.
inline constexpr int kDefaultExactCap = 20;

/// Per-vertex degrees and per-edge path/cycle weights of one graph.
///
/// path[i] is the length (in edges) of a longest path whose edge set contains
/// edges[i]; cycle[i] is the length of a longest cycle through edges[i], or 2
/// when the edge lies on no cycle.
struct WeightMap {
    std::vector<int> degrees;
    std::vector<Edge> edges;
    std::vector<int> path;
    std::vector<int> cycle;
    int longest_path = 0;
    /// 0 for forests.
    int circumference = 0;

    [[nodiscard]] int path_weight(Edge e) const;
    [[nodiscard]] int cycle_weight(Edge e) const;
    [[nodiscard]] int max_degree() const;
};

int longest_path_through_edge(const Graph& g, Edge e, int cap = kDefaultExactCap);
int longest_cycle_through_edge(const Graph& g, Edge e, int cap = kDefaultExactCap);
WeightMap all_weights(const Graph& g, int cap = kDefaultExactCap);

/// Biconnected components. Bridges are two-vertex blocks; isolated vertices
/// belong to no block.
struct BlockDecomposition {
    std::vector<std::vector<Edge>> blocks;
    VertexSet articulation_points;

    [[nodiscard]] std::vector<VertexSet> block_vertices() const;
};

BlockDecomposition block_decomposition(const Graph& g);

/// True iff every block induces a clique.
bool is_block_forest(const Graph& g);

namespace slow {

inline constexpr int kSubsetDpCap = 9;

/// Same quantities as all_weights, from a table of which vertex sets are
/// traced out by a simple path from a fixed root. Exponential in n.
WeightMap subset_dp_weights(const Graph& g);

}  // namespace slow

}  // namespace lcb
