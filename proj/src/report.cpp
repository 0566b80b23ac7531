#include "lcb/report.hpp"

#include <stdexcept>

namespace lcb {

namespace {

BoundReport make(BoundKind kind, int t, Count count, ExactRatio bound) {
    BoundReport r;
    r.kind = kind;
    r.t = t;
    r.count = count;
    r.bound = bound;
    r.slack = bound - ExactRatio(count);
    r.equality = r.slack == ExactRatio(0);
    return r;
}

}  // namespace

std::vector<BoundReport> bound_reports(const Graph& g, const WeightMap& w, int t) {
    if (t < 1) throw std::invalid_argument("bound_reports: t must be >= 1");
    const Count count = count_cliques_total(g, t);
    const int n = g.num_vertices();
    const int d = g.max_degree();
    std::vector<BoundReport> out;

    auto local_vertex = make(BoundKind::local_vertex, t, count, local_vertex_bound(g, t));
    // Integer form of the same comparison: t * N == Σ C(d(v), t-1).
    local_vertex.equality = checked_mul(t, count) == local_vertex_sum(g, t);
    if (t >= 2) local_vertex.certificate = vertex_equality_certificate(g, t, VertexReduction::core);

    auto wood = make(BoundKind::wood_classical, t, count, wood_bound(n, d, t));
    if (t >= 2) wood.certificate = wood_certificate(g);

    out.push_back(std::move(wood));
    out.push_back(std::move(local_vertex));
    if (t == 1) return out;

    const Int scaled = checked_mul(binomial(t, 2), count);

    auto cc_path = make(BoundKind::cc_path_classical, t, count, cc_path_bound(g.num_edges(), path_parameter(w), t));
    if (t >= 3) cc_path.certificate = cc_path_certificate(g, w);

    auto cc_cycle =
        make(BoundKind::cc_cycle_classical, t, count, cc_cycle_bound(g.num_edges(), cycle_parameter(w), t));
    if (t >= 3) cc_cycle.certificate = cc_cycle_certificate(g, w);

    auto local_edge = make(BoundKind::local_edge_path, t, count, local_edge_path_bound(g, w, t));
    local_edge.equality = scaled == local_edge_path_sum(w, t);
    if (t >= 3) local_edge.certificate = edge_equality_certificate(g, w, t);

    auto local_cycle = make(BoundKind::local_edge_cycle_conjecture, t, count, local_edge_cycle_bound(g, w, t));
    local_cycle.equality = scaled == local_edge_cycle_sum(w, t);
    if (t >= 3) local_cycle.certificate = cycle_equality_certificate(g, w, t);

    out.push_back(std::move(cc_path));
    out.push_back(std::move(cc_cycle));
    out.push_back(std::move(local_edge));
    out.push_back(std::move(local_cycle));
    return out;
}

std::vector<BoundReport> total_reports(const Graph& g) {
    const Count all = count_all_cliques(g);
    return {make(BoundKind::wood_total, 0, all, wood_total_bound(g.num_vertices(), g.max_degree())),
            make(BoundKind::local_vertex_total, 0, all, local_vertex_total_bound(g))};
}

}  // namespace lcb
