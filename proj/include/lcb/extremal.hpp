#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lcb/graph.hpp"
#include "lcb/weights.hpp"

namespace lcb {

enum class CertificateKind {
    /// Components of the degree-reduced graph are cliques (localized vertex bound).
    vertex_clique_components,
    /// Components of G minus the Z-edges are cliques (localized path bound).
    edge_clique_components,
    /// G minus the W-edges is a block forest (conjectured cycle bound).
    cycle_block_forest,
    /// G is a disjoint union of K_{Δ+1} (classical degree bound).
    wood_clique_union,
    /// Components are K_r or isolated vertices, r = longest path + 1.
    cc_path_clique_union,
    /// Every block is K_r, r = circumference; isolated vertices allowed.
    cc_cycle_block_forest,
};

std::string_view to_string(CertificateKind kind);

struct EqualityCertificate {
    CertificateKind kind = CertificateKind::vertex_clique_components;
    bool holds = true;
    /// Offending component or block, in the original graph's labels. Present iff !holds.
    std::optional<VertexSet> evidence;
    /// The graph the structural condition was checked on.
    Graph reduced;
    /// reduced vertex i is original vertex reduced_labels[i].
    std::vector<int> reduced_labels;
};

/// How the vertex certificate trims low-degree vertices before checking.
enum class VertexReduction {
    /// G[X] with X = {v : d(v) >= t-1}, one pass.
    single_pass,
    /// Repeat the trimming until every remaining vertex has degree >= t-1 in
    /// what remains (the (t-1)-core).
    core,
};

/// {v : d(v) + 1 >= t}.
VertexSet x_set(const Graph& g, int t);
/// Fixed point of x_set: the (t-1)-core.
VertexSet degree_core(const Graph& g, int t);
/// {e : p(e) + 1 < t}.
std::vector<Edge> z_set(const WeightMap& w, int t);
/// {e : c(e) < t}.
std::vector<Edge> w_set(const WeightMap& w, int t);

EqualityCertificate vertex_equality_certificate(const Graph& g, int t,
                                                VertexReduction reduction = VertexReduction::single_pass);
EqualityCertificate edge_equality_certificate(const Graph& g, const WeightMap& w, int t);
EqualityCertificate cycle_equality_certificate(const Graph& g, const WeightMap& w, int t);

EqualityCertificate wood_certificate(const Graph& g);
EqualityCertificate cc_path_certificate(const Graph& g, const WeightMap& w);
EqualityCertificate cc_cycle_certificate(const Graph& g, const WeightMap& w);

enum class Verdict { both_hold, both_fail, discrepancy };
std::string_view to_string(Verdict v);

/// One "equality iff certificate" comparison.
struct IffCheck {
    bool equality = false;
    bool certificate = false;
    /// Whether the characterization is claimed at this t at all.
    bool applies = false;
    [[nodiscard]] Verdict verdict() const {
        if (equality == certificate) return equality ? Verdict::both_hold : Verdict::both_fail;
        return Verdict::discrepancy;
    }
    [[nodiscard]] bool is_discrepancy() const { return applies && verdict() == Verdict::discrepancy; }
};

struct CrossValidation {
    int t = 1;
    std::string graph6;
    /// Degree-core reduction: equality and certificate both evaluated on the core.
    IffCheck vertex;
    /// G[X] after one trimming pass, with G[X]'s own degrees.
    IffCheck vertex_single_pass;
    /// Equality on G itself against the single-pass certificate.
    IffCheck vertex_unreduced;
    /// Present for t >= 2.
    std::optional<IffCheck> edge;
    std::optional<IffCheck> cycle;
};

CrossValidation cross_validate(const Graph& g, const WeightMap& w, int t);
CrossValidation cross_validate(const Graph& g, int t);

}  // namespace lcb
