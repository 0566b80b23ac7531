#include "lcb/extremal.hpp"

#include <numeric>
#include <stdexcept>

#include "lcb/bounds.hpp"
#include "lcb/cliques.hpp"

namespace lcb {

namespace {

void require_order(int t, int min) {
    if (t < min) throw std::invalid_argument("clique order t must be >= " + std::to_string(min));
}

std::vector<int> identity_labels(int n) {
    std::vector<int> ids(static_cast<std::size_t>(n));
    std::iota(ids.begin(), ids.end(), 0);
    return ids;
}

VertexSet lift(VertexSet s, const std::vector<int>& labels) {
    VertexSet out;
    for (int v : s) out.insert(labels[v]);
    return out;
}

/// Fills holds/evidence: every component must be a clique accepted by `ok`.
template <typename Accept>
void check_components(EqualityCertificate& cert, Accept ok) {
    for (VertexSet comp : connected_components(cert.reduced)) {
        if (!is_clique(cert.reduced, comp) || !ok(comp.size())) {
            cert.holds = false;
            cert.evidence = lift(comp, cert.reduced_labels);
            return;
        }
    }
    cert.holds = true;
}

template <typename Accept>
void check_blocks(EqualityCertificate& cert, Accept ok) {
    const auto dec = block_decomposition(cert.reduced);
    const auto vertex_sets = dec.block_vertices();
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const std::size_t k = static_cast<std::size_t>(vertex_sets[i].size());
        if (dec.blocks[i].size() != k * (k - 1) / 2 || !ok(vertex_sets[i].size())) {
            cert.holds = false;
            cert.evidence = lift(vertex_sets[i], cert.reduced_labels);
            return;
        }
    }
    cert.holds = true;
}

EqualityCertificate on_induced(const Graph& g, VertexSet keep, CertificateKind kind) {
    auto sub = induced_subgraph(g, keep);
    EqualityCertificate cert;
    cert.kind = kind;
    cert.reduced = std::move(sub.graph);
    cert.reduced_labels = std::move(sub.original);
    return cert;
}

EqualityCertificate on_edge_deletion(const Graph& g, const std::vector<Edge>& drop, CertificateKind kind) {
    EqualityCertificate cert;
    cert.kind = kind;
    cert.reduced = delete_edges(g, drop);
    cert.reduced_labels = identity_labels(g.num_vertices());
    return cert;
}

bool vertex_bound_tight(const Graph& h, int t) {
    return checked_mul(t, count_cliques_total(h, t)) == local_vertex_sum(h, t);
}

}  // namespace

std::string_view to_string(CertificateKind kind) {
    switch (kind) {
        case CertificateKind::vertex_clique_components: return "vertex_clique_components";
        case CertificateKind::edge_clique_components: return "edge_clique_components";
        case CertificateKind::cycle_block_forest: return "cycle_block_forest";
        case CertificateKind::wood_clique_union: return "wood_clique_union";
        case CertificateKind::cc_path_clique_union: return "cc_path_clique_union";
        case CertificateKind::cc_cycle_block_forest: return "cc_cycle_block_forest";
    }
    return "unknown";
}

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::both_hold: return "both-hold";
        case Verdict::both_fail: return "both-fail";
        case Verdict::discrepancy: return "DISCREPANCY";
    }
    return "unknown";
}

VertexSet x_set(const Graph& g, int t) {
    require_order(t, 1);
    VertexSet out;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) + 1 >= t) out.insert(v);
    return out;
}

VertexSet degree_core(const Graph& g, int t) {
    require_order(t, 1);
    VertexSet keep = g.vertices();
    while (true) {
        VertexSet next;
        for (int v : keep)
            if ((g.neighbors(v) & keep).size() + 1 >= t) next.insert(v);
        if (next == keep) return keep;
        keep = next;
    }
}

std::vector<Edge> z_set(const WeightMap& w, int t) {
    require_order(t, 2);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < w.edges.size(); ++i)
        if (w.path[i] + 1 < t) out.push_back(w.edges[i]);
    return out;
}

std::vector<Edge> w_set(const WeightMap& w, int t) {
    require_order(t, 2);
    std::vector<Edge> out;
    for (std::size_t i = 0; i < w.edges.size(); ++i)
        if (w.cycle[i] < t) out.push_back(w.edges[i]);
    return out;
}

EqualityCertificate vertex_equality_certificate(const Graph& g, int t, VertexReduction reduction) {
    const VertexSet keep = reduction == VertexReduction::core ? degree_core(g, t) : x_set(g, t);
    auto cert = on_induced(g, keep, CertificateKind::vertex_clique_components);
    check_components(cert, [](int) { return true; });
    return cert;
}

EqualityCertificate edge_equality_certificate(const Graph& g, const WeightMap& w, int t) {
    auto cert = on_edge_deletion(g, z_set(w, t), CertificateKind::edge_clique_components);
    check_components(cert, [](int) { return true; });
    return cert;
}

EqualityCertificate cycle_equality_certificate(const Graph& g, const WeightMap& w, int t) {
    auto cert = on_edge_deletion(g, w_set(w, t), CertificateKind::cycle_block_forest);
    check_blocks(cert, [](int) { return true; });
    return cert;
}

EqualityCertificate wood_certificate(const Graph& g) {
    auto cert = on_induced(g, g.vertices(), CertificateKind::wood_clique_union);
    const int want = g.max_degree() + 1;
    check_components(cert, [want](int k) { return k == want; });
    return cert;
}

EqualityCertificate cc_path_certificate(const Graph& g, const WeightMap& w) {
    auto cert = on_induced(g, g.vertices(), CertificateKind::cc_path_clique_union);
    const int r = path_parameter(w);
    check_components(cert, [r](int k) { return k == 1 || k == r; });
    return cert;
}

EqualityCertificate cc_cycle_certificate(const Graph& g, const WeightMap& w) {
    auto cert = on_induced(g, g.vertices(), CertificateKind::cc_cycle_block_forest);
    const int r = cycle_parameter(w);
    check_blocks(cert, [r](int k) { return k == r; });
    return cert;
}

CrossValidation cross_validate(const Graph& g, const WeightMap& w, int t) {
    require_order(t, 1);
    CrossValidation out;
    out.t = t;
    out.graph6 = write_graph6(g);

    const bool claimed_vertex = t >= 2;
    {
        const auto core = induced_subgraph(g, degree_core(g, t)).graph;
        out.vertex.equality = vertex_bound_tight(core, t);
        out.vertex.certificate = vertex_equality_certificate(g, t, VertexReduction::core).holds;
        out.vertex.applies = claimed_vertex;
    }
    const auto single = vertex_equality_certificate(g, t, VertexReduction::single_pass);
    out.vertex_single_pass.equality = vertex_bound_tight(single.reduced, t);
    out.vertex_single_pass.certificate = single.holds;
    out.vertex_single_pass.applies = claimed_vertex;

    out.vertex_unreduced.equality = vertex_bound_tight(g, t);
    out.vertex_unreduced.certificate = single.holds;
    out.vertex_unreduced.applies = claimed_vertex;

    if (t >= 2) {
        const Count count = count_cliques_total(g, t);
        const Int scaled = checked_mul(binomial(t, 2), count);
        IffCheck edge;
        edge.equality = scaled == local_edge_path_sum(w, t);
        edge.certificate = edge_equality_certificate(g, w, t).holds;
        edge.applies = t >= 3;
        out.edge = edge;

        IffCheck cycle;
        cycle.equality = scaled == local_edge_cycle_sum(w, t);
        cycle.certificate = cycle_equality_certificate(g, w, t).holds;
        cycle.applies = t >= 3;
        out.cycle = cycle;
    }
    return out;
}

CrossValidation cross_validate(const Graph& g, int t) { return cross_validate(g, all_weights(g), t); }

}  // namespace lcb
