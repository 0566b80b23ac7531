#pragma once

#include <optional>
#include <vector>

#include "lcb/bounds.hpp"
#include "lcb/cliques.hpp"
#include "lcb/extremal.hpp"

namespace lcb {

/// Both sides of one bound on one graph.
struct BoundReport {
    BoundKind kind = BoundKind::local_vertex;
    /// 0 for the all-orders kinds.
    int t = 0;
    Count count = 0;
    ExactRatio bound;
    /// bound - count; negative only if the bound is violated.
    ExactRatio slack;
    bool equality = false;
    /// Absent where the characterization is vacuous (equality always holds).
    std::optional<EqualityCertificate> certificate;
};

/// Every per-order kind applicable at t: at t = 1 the two degree bounds, at
/// t >= 2 all six. Vertex certificates use the degree-core reduction.
std::vector<BoundReport> bound_reports(const Graph& g, const WeightMap& w, int t);

/// wood_total and local_vertex_total against count_all_cliques.
std::vector<BoundReport> total_reports(const Graph& g);

}  // namespace lcb
