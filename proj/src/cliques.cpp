#include "lcb/cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcb {

namespace {

void require_order(int t) {
    if (t < 1) throw std::invalid_argument("clique order t must be >= 1, got " + std::to_string(t));
}

/// Vertices strictly above v.
VertexSet above(int v) { return VertexSet(v >= 63 ? 0 : ~std::uint64_t{0} << (v + 1)); }

class TallyCounter {
public:
    TallyCounter(const Graph& g, int t) : g_(g), t_(t) {
        const int n = g.num_vertices();
        out_.t = t;
        out_.per_vertex.assign(static_cast<std::size_t>(n), 0);
        out_.edges = g.edges();
        out_.per_edge.assign(out_.edges.size(), 0);
        index_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), -1);
        for (std::size_t i = 0; i < out_.edges.size(); ++i) {
            const Edge e = out_.edges[i];
            index_[e.u * n + e.v] = static_cast<int>(i);
            index_[e.v * n + e.u] = static_cast<int>(i);
        }
    }

    CliqueCounts run() && {
        extend(g_.vertices());
        return std::move(out_);
    }

private:
    Count& edge_tally(int a, int b) { return out_.per_edge[index_[a * g_.num_vertices() + b]]; }

    void extend(VertexSet candidates) {
        if (static_cast<int>(prefix_.size()) == t_ - 1) {
            const Count k = candidates.size();
            if (k == 0) return;
            out_.total = checked_add(out_.total, k);
            for (std::size_t i = 0; i < prefix_.size(); ++i) {
                out_.per_vertex[prefix_[i]] = checked_add(out_.per_vertex[prefix_[i]], k);
                for (std::size_t j = i + 1; j < prefix_.size(); ++j)
                    edge_tally(prefix_[i], prefix_[j]) = checked_add(edge_tally(prefix_[i], prefix_[j]), k);
            }
            for (int w : candidates) {
                out_.per_vertex[w] = checked_add(out_.per_vertex[w], 1);
                for (int x : prefix_) edge_tally(x, w) = checked_add(edge_tally(x, w), 1);
            }
            return;
        }
        const int need = t_ - 1 - static_cast<int>(prefix_.size());
        for (int v : candidates) {
            const VertexSet next = candidates & g_.neighbors(v) & above(v);
            if (next.size() < need) continue;
            prefix_.push_back(v);
            extend(next);
            prefix_.pop_back();
        }
    }

    const Graph& g_;
    int t_;
    CliqueCounts out_;
    std::vector<int> index_;
    std::vector<int> prefix_;
};

Count count_within(const Graph& g, VertexSet candidates, int remaining) {
    if (remaining == 0) return 1;
    if (remaining == 1) return candidates.size();
    Count total = 0;
    for (int v : candidates) {
        const VertexSet next = candidates & g.neighbors(v) & above(v);
        if (next.size() < remaining - 1) continue;
        total = checked_add(total, count_within(g, next, remaining - 1));
    }
    return total;
}

Count count_all_within(const Graph& g, VertexSet candidates) {
    Count total = 0;
    for (int v : candidates)
        total = checked_add(total, checked_add(1, count_all_within(g, candidates & g.neighbors(v) & above(v))));
    return total;
}

}  // namespace

Count CliqueCounts::on_edge(Edge e) const {
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw GraphError("on_edge: not an edge");
    return per_edge[static_cast<std::size_t>(it - edges.begin())];
}

CliqueCounts count_cliques(const Graph& g, int t) {
    require_order(t);
    return TallyCounter(g, t).run();
}

Count count_cliques_total(const Graph& g, int t) {
    require_order(t);
    return count_within(g, g.vertices(), t);
}

Count count_all_cliques(const Graph& g) { return count_all_within(g, g.vertices()); }

Count cliques_through_vertex(const Graph& g, int x, int t) {
    require_order(t);
    if (x < 0 || x >= g.num_vertices()) throw GraphError("no vertex " + std::to_string(x));
    return count_within(g, g.neighbors(x), t - 1);
}

int common_neighbors(const Graph& g, Edge e) {
    if (!g.has_edge(e))
        throw GraphError("common_neighbors: (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
    return (g.neighbors(e.u) & g.neighbors(e.v)).size();
}

namespace slow {

Count naive_count_cliques(const Graph& g, int t) {
    require_order(t);
    const int n = g.num_vertices();
    if (n > kNaiveCliqueCap)
        throw CapExceeded("naive clique oracle is limited to n <= " + std::to_string(kNaiveCliqueCap) +
                          ", got n=" + std::to_string(n));
    if (t > n) return 0;
    // Walk all t-combinations in lexicographic order.
    std::vector<int> pick(static_cast<std::size_t>(t));
    for (int i = 0; i < t; ++i) pick[i] = i;
    Count total = 0;
    while (true) {
        bool complete = true;
        for (int i = 0; i < t && complete; ++i)
            for (int j = i + 1; j < t; ++j)
                if (!g.adjacent(pick[i], pick[j])) {
                    complete = false;
                    break;
                }
        if (complete) ++total;
        int i = t - 1;
        while (i >= 0 && pick[i] == n - t + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < t; ++j) pick[j] = pick[j - 1] + 1;
    }
    return total;
}

}  // namespace slow

}  // namespace lcb
