#include <gtest/gtest.h>

#include <random>

#include "lcb/bounds.hpp"
#include "lcb/cliques.hpp"
#include "lcb/enumerate.hpp"
#include "oracles.hpp"

namespace lcb {
namespace {

using oracle::choose;

ExactRatio local_vertex_by_hand(const Graph& g, int t) {
    std::int64_t sum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) sum += choose(g.degree(v), t - 1);
    return {sum, t};
}

ExactRatio local_edge_by_hand(const Graph& g, int t) {
    std::int64_t sum = 0;
    for (const auto& [edge, p] : oracle::weights(g).path) sum += choose(p - 1, t - 2);
    return {sum, choose(t, 2)};
}

TEST(Wood, Examples) {
    EXPECT_EQ(wood_bound(4, 3, 3), ExactRatio(4));
    EXPECT_EQ(wood_bound(5, 2, 3), ExactRatio(5, 3));
    for (int n = 1; n < 9; ++n)
        for (int d = 0; d < n; ++d) EXPECT_EQ(wood_bound(n, d, 1), ExactRatio(n));
    EXPECT_EQ(wood_total_bound(3, 2), ExactRatio(7));
    EXPECT_EQ(wood_total_bound(4, 3), ExactRatio(15));
    EXPECT_EQ(wood_total_bound(1, 0), ExactRatio(1));
}

TEST(Wood, ClosedFormsAgree) {
    // n*C(d+1,t)/(d+1) == n*C(d,t-1)/t
    for (int d = 0; d <= 40; ++d)
        for (int t = 1; t <= d + 2; ++t) EXPECT_EQ(wood_bound(7, d, t), ExactRatio(7 * choose(d, t - 1), t));
}

TEST(ChakrabortiChen, Examples) {
    EXPECT_EQ(cc_path_bound(6, 4, 3), ExactRatio(4));
    EXPECT_EQ(cc_path_bound(3, 3, 3), ExactRatio(1));
    EXPECT_EQ(cc_cycle_bound(6, 4, 3), ExactRatio(4));
    EXPECT_EQ(cc_cycle_bound(12, 4, 3), ExactRatio(8));
    for (int m = 0; m < 20; ++m)
        for (int r = 2; r < 9; ++r) {
            EXPECT_EQ(cc_path_bound(m, r, 2), ExactRatio(m));
            EXPECT_EQ(cc_cycle_bound(m, r, 2), ExactRatio(m));
        }
}

TEST(LocalVertex, Examples) {
    EXPECT_EQ(local_vertex_bound(oracle::complete(4), 3), ExactRatio(4));
    EXPECT_EQ(local_vertex_bound(oracle::path(3), 3), ExactRatio(1, 3));
    EXPECT_EQ(local_vertex_bound(oracle::path(4), 3), ExactRatio(2, 3));
    EXPECT_EQ(local_vertex_total_bound(oracle::complete(3)), ExactRatio(7));
    EXPECT_EQ(local_vertex_total_bound(Graph(1)), ExactRatio(1));
    EXPECT_EQ(local_vertex_total_bound(oracle::path(3)), ExactRatio(16, 3));
}

TEST(LocalEdge, Examples) {
    const Graph k4 = oracle::complete(4);
    EXPECT_EQ(local_edge_path_bound(k4, all_weights(k4), 3), ExactRatio(4));
    EXPECT_EQ(local_edge_cycle_bound(k4, all_weights(k4), 3), ExactRatio(4));
    const Graph p4 = oracle::path(4);
    EXPECT_EQ(local_edge_path_bound(p4, all_weights(p4), 3), ExactRatio(2));
    const Graph tree = oracle::star(4);
    EXPECT_EQ(local_edge_cycle_bound(tree, all_weights(tree), 3), ExactRatio(0));
    EXPECT_THROW(local_edge_path_bound(p4, all_weights(k4), 3), std::invalid_argument);
}

TEST(Formulas, MatchHandComputation) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const WeightMap w = all_weights(g);
            for (int t = 1; t <= n + 1; ++t) {
                EXPECT_EQ(local_vertex_bound(g, t), local_vertex_by_hand(g, t));
                if (t >= 2) EXPECT_EQ(local_edge_path_bound(g, w, t), local_edge_by_hand(g, t));
            }
        }
}

TEST(Collapse, EveryLocalBoundIsEdgeCountAtOrderTwo) {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(1 + static_cast<int>(rng() % 12), 0.4, rng);
        const WeightMap w = all_weights(g);
        const ExactRatio m(g.num_edges());
        EXPECT_EQ(local_vertex_bound(g, 2), m);
        EXPECT_EQ(local_edge_path_bound(g, w, 2), m);
        EXPECT_EQ(local_edge_cycle_bound(g, w, 2), m);
        EXPECT_EQ(cc_path_bound(g.num_edges(), path_parameter(w), 2), m);
    }
}

TEST(Identity, BinomialRecurrenceInRationals) {
    for (int d = 2; d <= 40; ++d)
        for (int t = 2; t <= d; ++t) {
            const ExactRatio c(binomial(d, t - 1));
            const ExactRatio lhs = ExactRatio(1, t) * ExactRatio(binomial(d - 1, t - 1));
            const ExactRatio rhs = ExactRatio(1, t) * c - ExactRatio(1, d) * c + ExactRatio(1, Int(t) * d) * c;
            EXPECT_EQ(lhs, rhs) << "d=" << d << " t=" << t;
        }
}

TEST(Dominance, Examples) {
    const Graph c5 = oracle::cycle(5);
    const auto dc5 = compare_local_vs_classical(c5, all_weights(c5), 3);
    EXPECT_EQ(dc5.vertex.local, ExactRatio(5, 3));
    EXPECT_EQ(dc5.vertex.classical, ExactRatio(5, 3));

    const Graph paw = oracle::paw();
    const auto dp = compare_local_vs_classical(paw, all_weights(paw), 3);
    EXPECT_EQ(dp.vertex.local, ExactRatio(5, 3));
    EXPECT_EQ(dp.vertex.classical, wood_bound(4, 3, 3));
    EXPECT_LT(dp.vertex.local, dp.vertex.classical);

    const Graph k4 = oracle::complete(4);
    const auto dk = compare_local_vs_classical(k4, all_weights(k4), 3);
    EXPECT_EQ(dk.vertex.gap(), ExactRatio(0));
    ASSERT_TRUE(dk.edge);
    EXPECT_EQ(dk.edge->gap(), ExactRatio(0));
    EXPECT_EQ(dk.path_r, 4);

    const auto empty = compare_local_vs_classical(Graph(3), all_weights(Graph(3)), 2);
    EXPECT_FALSE(empty.edge);
    EXPECT_TRUE(empty.holds());
}

TEST(Soundness, ExhaustiveSmallGraphs) {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_graphs(n)) {
            const WeightMap w = all_weights(g);
            for (int t = 1; t <= n; ++t) {
                const ExactRatio count(count_cliques_total(g, t));
                EXPECT_LE(count, local_vertex_bound(g, t)) << write_graph6(g) << " t=" << t;
                EXPECT_LE(local_vertex_bound(g, t), wood_bound(n, g.max_degree(), t));
                if (t >= 2) {
                    EXPECT_LE(count, local_edge_path_bound(g, w, t)) << write_graph6(g) << " t=" << t;
                    if (g.num_edges() > 0)
                        EXPECT_LE(local_edge_path_bound(g, w, t), cc_path_bound(g.num_edges(), path_parameter(w), t));
                }
            }
            const ExactRatio all(count_all_cliques(g));
            EXPECT_LE(all, local_vertex_total_bound(g));
            EXPECT_LE(local_vertex_total_bound(g), wood_total_bound(n, g.max_degree()));
        }
}

TEST(Names, RoundTrip) {
    for (auto k : {BoundKind::wood_classical, BoundKind::wood_total, BoundKind::cc_path_classical,
                   BoundKind::cc_cycle_classical, BoundKind::local_vertex, BoundKind::local_vertex_total,
                   BoundKind::local_edge_path, BoundKind::local_edge_cycle_conjecture})
        EXPECT_EQ(parse_bound_kind(to_string(k)), k);
    EXPECT_FALSE(parse_bound_kind("nope"));
    EXPECT_TRUE(is_total_kind(BoundKind::wood_total));
    EXPECT_FALSE(is_total_kind(BoundKind::local_vertex));
}

}  // namespace
}  // namespace lcb
