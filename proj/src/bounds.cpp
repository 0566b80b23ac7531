#include "lcb/bounds.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <utility>

namespace lcb {

namespace {

constexpr std::array<std::pair<BoundKind, std::string_view>, 8> kKindNames{{
    {BoundKind::wood_classical, "wood_classical"},
    {BoundKind::wood_total, "wood_total"},
    {BoundKind::cc_path_classical, "cc_path_classical"},
    {BoundKind::cc_cycle_classical, "cc_cycle_classical"},
    {BoundKind::local_vertex, "local_vertex"},
    {BoundKind::local_vertex_total, "local_vertex_total"},
    {BoundKind::local_edge_path, "local_edge_path"},
    {BoundKind::local_edge_cycle_conjecture, "local_edge_cycle_conjecture"},
}};

void require(bool ok, const char* what) {
    if (!ok) throw std::invalid_argument(what);
}

Int power_of_two_minus_one(int exponent) {
    if (exponent >= 126) throw OverflowError("2^" + std::to_string(exponent) + " does not fit");
    return (Int{1} << exponent) - 1;
}

void require_matching(const Graph& g, const WeightMap& w) {
    if (static_cast<int>(w.edges.size()) != g.num_edges() ||
        static_cast<int>(w.degrees.size()) != g.num_vertices())
        throw std::invalid_argument("weight map was computed for a different graph");
}

}  // namespace

std::string_view to_string(BoundKind kind) {
    for (const auto& [k, name] : kKindNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
    for (const auto& [k, text] : kKindNames)
        if (text == name) return k;
    return std::nullopt;
}

bool is_total_kind(BoundKind kind) {
    return kind == BoundKind::wood_total || kind == BoundKind::local_vertex_total;
}

ExactRatio wood_bound(int n, int d, int t) {
    require(t >= 1, "wood_bound: t must be >= 1");
    require(d >= 0 && n >= 0, "wood_bound: n and d must be >= 0");
    return ExactRatio(checked_mul(n, binomial(d + 1, t)), d + 1);
}

ExactRatio wood_total_bound(int n, int d) {
    require(d >= 0 && n >= 0, "wood_total_bound: n and d must be >= 0");
    return ExactRatio(checked_mul(n, power_of_two_minus_one(d + 1)), d + 1);
}

ExactRatio cc_path_bound(Int m, int r, int t) {
    require(t >= 2, "cc_path_bound: t must be >= 2");
    require(r >= 2, "cc_path_bound: r must be >= 2");
    require(m >= 0, "cc_path_bound: m must be >= 0");
    return ExactRatio(checked_mul(m, binomial(r, t)), binomial(r, 2));
}

ExactRatio cc_cycle_bound(Int m, int r, int t) {
    require(t >= 2, "cc_cycle_bound: t must be >= 2");
    require(r >= 2, "cc_cycle_bound: r must be >= 2");
    require(m >= 0, "cc_cycle_bound: m must be >= 0");
    return ExactRatio(checked_mul(m, binomial(r, t)), binomial(r, 2));
}

Int local_vertex_sum(const Graph& g, int t) {
    require(t >= 1, "local_vertex_sum: t must be >= 1");
    Int sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) sum = checked_add(sum, binomial(g.degree(v), t - 1));
    return sum;
}

ExactRatio local_vertex_bound(const Graph& g, int t) { return {local_vertex_sum(g, t), t}; }

ExactRatio local_vertex_total_bound(const Graph& g) {
    ExactRatio sum;
    for (int v = 0; v < g.num_vertices(); ++v) {
        const int d = g.degree(v);
        sum += ExactRatio(power_of_two_minus_one(d + 1), d + 1);
    }
    return sum;
}

Int local_edge_path_sum(const WeightMap& w, int t) {
    require(t >= 2, "local_edge_path_sum: t must be >= 2");
    Int sum = 0;
    for (int p : w.path) sum = checked_add(sum, binomial(p - 1, t - 2));
    return sum;
}

ExactRatio local_edge_path_bound(const Graph& g, const WeightMap& w, int t) {
    require_matching(g, w);
    return {local_edge_path_sum(w, t), binomial(t, 2)};
}

Int local_edge_cycle_sum(const WeightMap& w, int t) {
    require(t >= 2, "local_edge_cycle_sum: t must be >= 2");
    Int sum = 0;
    for (int c : w.cycle) sum = checked_add(sum, binomial(c - 2, t - 2));
    return sum;
}

ExactRatio local_edge_cycle_bound(const Graph& g, const WeightMap& w, int t) {
    require_matching(g, w);
    return {local_edge_cycle_sum(w, t), binomial(t, 2)};
}

int path_parameter(const WeightMap& w) { return std::max(2, w.longest_path + 1); }
int cycle_parameter(const WeightMap& w) { return std::max(2, w.circumference); }

Dominance compare_local_vs_classical(const Graph& g, const WeightMap& w, int t) {
    require(t >= 2, "compare_local_vs_classical: t must be >= 2");
    require_matching(g, w);
    Dominance out;
    out.t = t;
    out.max_degree = g.max_degree();
    out.vertex = {local_vertex_bound(g, t), wood_bound(g.num_vertices(), out.max_degree, t)};
    if (g.num_edges() > 0) {
        out.path_r = path_parameter(w);
        out.edge = BoundPair{local_edge_path_bound(g, w, t), cc_path_bound(g.num_edges(), *out.path_r, t)};
    }
    return out;
}

}  // namespace lcb
