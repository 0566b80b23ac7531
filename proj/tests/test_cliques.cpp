#include <gtest/gtest.h>

#include <random>

#include "lcb/cliques.hpp"
#include "oracles.hpp"

namespace lcb {
namespace {

TEST(Count, Examples) {
    EXPECT_EQ(count_cliques(oracle::complete(4), 3).total, 4);
    EXPECT_EQ(count_cliques(oracle::path(3), 3).total, 0);
    const auto paw = count_cliques(oracle::paw(), 3);
    EXPECT_EQ(paw.total, 1);
    EXPECT_EQ(paw.per_vertex, (std::vector<Count>{1, 1, 1, 0}));
    EXPECT_EQ(paw.on_edge(Edge::of(1, 2)), 1);
    EXPECT_EQ(paw.on_edge(Edge::of(0, 3)), 0);
}

TEST(Count, EdgeCases) {
    EXPECT_EQ(count_cliques(Graph(0), 1).total, 0);
    EXPECT_EQ(count_cliques(Graph(5), 1).total, 5);
    EXPECT_EQ(count_cliques(oracle::complete(4), 5).total, 0);
    EXPECT_THROW(count_cliques(Graph(3), 0), std::invalid_argument);
    EXPECT_EQ(count_cliques_total(oracle::complete(24), 12), binomial(24, 12));
    EXPECT_EQ(count_cliques_total(oracle::complete(64), 3), binomial(64, 3));
}

TEST(AllOrders, Examples) {
    EXPECT_EQ(count_all_cliques(oracle::complete(3)), 7);
    EXPECT_EQ(count_all_cliques(oracle::path(3)), 5);
    EXPECT_EQ(count_all_cliques(oracle::complete(4)), 15);
}

TEST(ThroughVertex, Examples) {
    for (int v = 0; v < 4; ++v) EXPECT_EQ(cliques_through_vertex(oracle::complete(4), v, 3), 3);
    EXPECT_EQ(cliques_through_vertex(oracle::star(3), 0, 2), 3);
    EXPECT_EQ(cliques_through_vertex(oracle::path(3), 1, 3), 0);
    EXPECT_EQ(cliques_through_vertex(oracle::path(3), 1, 1), 1);
}

TEST(CommonNeighbors, Examples) {
    EXPECT_EQ(common_neighbors(oracle::complete(4), Edge::of(0, 3)), 2);
    EXPECT_EQ(common_neighbors(oracle::cycle(4), Edge::of(0, 1)), 0);
    const Graph diamond = Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    EXPECT_EQ(common_neighbors(diamond, Edge::of(1, 2)), 2);
    EXPECT_THROW(common_neighbors(diamond, Edge::of(0, 3)), GraphError);
}

TEST(Oracle, RandomGraphsAgreeWithSubsetScan) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const double p = std::array{0.2, 0.5, 0.8}[trial % 3];
        const Graph g = oracle::random_graph(n, p, rng);
        for (int t = 1; t <= n; ++t) {
            const auto counts = count_cliques(g, t);
            ASSERT_EQ(counts.total, oracle::cliques(g, t)) << write_graph6(g) << " t=" << t;
            EXPECT_EQ(count_cliques_total(g, t), counts.total);
            EXPECT_EQ(slow::naive_count_cliques(g, t), counts.total);
            for (int v = 0; v < n; ++v)
                EXPECT_EQ(counts.per_vertex[v], oracle::cliques_containing(g, t, std::uint64_t{1} << v));
            for (std::size_t i = 0; i < counts.edges.size(); ++i) {
                const Edge e = counts.edges[i];
                EXPECT_EQ(counts.per_edge[i],
                          oracle::cliques_containing(g, t, (std::uint64_t{1} << e.u) | (std::uint64_t{1} << e.v)));
            }
        }
    }
}

TEST(Oracle, NaiveRefusesLargeGraphs) {
    EXPECT_THROW(slow::naive_count_cliques(Graph(11), 2), CapExceeded);
}

TEST(Identity, ThroughVertexIsCliquesInNeighbourhood) {
    for (int n = 1; n <= 6; ++n)
        for (const Graph& g : oracle::all_labelled(n))
            for (int x = 0; x < n; ++x) {
                const Graph nbhd = induced_subgraph(g, g.neighbors(x)).graph;
                for (int t = 2; t <= n; ++t)
                    ASSERT_EQ(cliques_through_vertex(g, x, t), Int(oracle::cliques(nbhd, t - 1)));
            }
}

TEST(Identity, ThroughVertexOnDenseRandomGraphs) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = oracle::random_graph(8, 0.7, rng);
        for (int x = 0; x < 8; ++x) {
            const Graph nbhd = induced_subgraph(g, g.neighbors(x)).graph;
            for (int t = 2; t <= 8; ++t) EXPECT_EQ(cliques_through_vertex(g, x, t), Int(oracle::cliques(nbhd, t - 1)));
        }
    }
}

TEST(DoubleCounting, TalliesSumCorrectly) {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 20), 0.5, rng);
        for (int t = 1; t <= 7; ++t) {
            const auto c = count_cliques(g, t);
            Int vs = 0;
            for (Count x : c.per_vertex) vs += x;
            EXPECT_EQ(vs, Int(t) * c.total);
            Int es = 0;
            for (Count x : c.per_edge) es += x;
            EXPECT_EQ(es, binomial(t, 2) * c.total);
        }
    }
}

TEST(PerEdge, BoundedByCommonNeighbourhood) {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
        const Graph g = oracle::random_graph(2 + static_cast<int>(rng() % 16), 0.6, rng);
        for (int t = 2; t <= 6; ++t) {
            const auto c = count_cliques(g, t);
            for (std::size_t i = 0; i < c.edges.size(); ++i)
                EXPECT_LE(c.per_edge[i], binomial(common_neighbors(g, c.edges[i]), t - 2));
        }
    }
}

}  // namespace
}  // namespace lcb
