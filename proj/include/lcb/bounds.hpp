#pragma once

#include <optional>
#include <string_view>

#include "lcb/exact.hpp"
#include "lcb/graph.hpp"
#include "lcb/weights.hpp"

namespace lcb {

enum class BoundKind {
    wood_classical,
    wood_total,
    cc_path_classical,
    cc_cycle_classical,
    local_vertex,
    local_vertex_total,
    local_edge_path,
    local_edge_cycle_conjecture,
};

std::string_view to_string(BoundKind kind);
std::optional<BoundKind> parse_bound_kind(std::string_view name);
/// Kinds that take no clique order (they bound cliques of every order at once).
bool is_total_kind(BoundKind kind);

// Classical bounds. Their parameters (d, r) are taken explicitly.

/// n * C(d+1, t) / (d+1).
ExactRatio wood_bound(int n, int d, int t);
/// n * (2^(d+1) - 1) / (d+1).
ExactRatio wood_total_bound(int n, int d);
/// m * C(r, t) / C(r, 2), for P_{r+1}-free graphs.
ExactRatio cc_path_bound(Int m, int r, int t);
/// Same closed form as cc_path_bound, for circumference at most r.
ExactRatio cc_cycle_bound(Int m, int r, int t);

// Localized bounds. The *_sum functions return the integer numerator used on
// the equality path (t * count vs sum, C(t,2) * count vs sum).

/// Σ_v C(d(v), t-1).
Int local_vertex_sum(const Graph& g, int t);
ExactRatio local_vertex_bound(const Graph& g, int t);
/// Σ_v (2^(d(v)+1) - 1) / (d(v)+1).
ExactRatio local_vertex_total_bound(const Graph& g);

/// Σ_e C(p(e)-1, t-2).
Int local_edge_path_sum(const WeightMap& w, int t);
ExactRatio local_edge_path_bound(const Graph& g, const WeightMap& w, int t);
/// Σ_e C(c(e)-2, t-2).
Int local_edge_cycle_sum(const WeightMap& w, int t);
ExactRatio local_edge_cycle_bound(const Graph& g, const WeightMap& w, int t);

/// The classical parameter each localized edge bound collapses to:
/// r = longest path + 1 (path form) and r = circumference (cycle form),
/// both floored at 2.
int path_parameter(const WeightMap& w);
int cycle_parameter(const WeightMap& w);

struct BoundPair {
    ExactRatio local;
    ExactRatio classical;
    [[nodiscard]] bool dominated() const { return local <= classical; }
    [[nodiscard]] ExactRatio gap() const { return classical - local; }
};

struct Dominance {
    int t = 2;
    int max_degree = 0;
    BoundPair vertex;
    /// Present when the graph has edges.
    std::optional<int> path_r;
    std::optional<BoundPair> edge;

    /// Both localized bounds sit at or below their classical counterparts.
    [[nodiscard]] bool holds() const { return vertex.dominated() && (!edge || edge->dominated()); }
};

Dominance compare_local_vs_classical(const Graph& g, const WeightMap& w, int t);

}  // namespace lcb
