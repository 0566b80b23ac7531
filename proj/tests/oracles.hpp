#pragma once

// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library except the Graph accessors.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lcb/graph.hpp"

namespace oracle {

using lcb::Graph;

inline std::int64_t choose(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

inline bool subset_is_clique(const Graph& g, std::uint64_t s) {
    for (int u = 0; u < g.num_vertices(); ++u)
        if ((s >> u) & 1U)
            for (int v = u + 1; v < g.num_vertices(); ++v)
                if (((s >> v) & 1U) && !g.adjacent(u, v)) return false;
    return true;
}

/// Copies of K_t, by scanning all 2^n vertex subsets.
inline std::int64_t cliques(const Graph& g, int t) {
    std::int64_t total = 0;
    const std::uint64_t limit = std::uint64_t{1} << g.num_vertices();
    for (std::uint64_t s = 0; s < limit; ++s)
        if (__builtin_popcountll(s) == t && subset_is_clique(g, s)) ++total;
    return total;
}

inline std::int64_t cliques_containing(const Graph& g, int t, std::uint64_t must) {
    std::int64_t total = 0;
    const std::uint64_t limit = std::uint64_t{1} << g.num_vertices();
    for (std::uint64_t s = 0; s < limit; ++s)
        if ((s & must) == must && __builtin_popcountll(s) == t && subset_is_clique(g, s)) ++total;
    return total;
}

inline Graph from_pairs(int n, const std::vector<std::pair<int, int>>& edges) {
    return Graph::from_edge_list(n, edges);
}

/// Per-edge longest path and longest cycle, by listing every simple path.
struct Weights {
    std::map<std::pair<int, int>, int> path;
    std::map<std::pair<int, int>, int> cycle;
};

inline Weights weights(const Graph& g) {
    const int n = g.num_vertices();
    Weights w;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.adjacent(u, v)) {
                w.path[{u, v}] = 1;
                w.cycle[{u, v}] = 2;
            }
    std::vector<int> walk;
    std::vector<bool> used(n, false);
    auto credit = [&](std::map<std::pair<int, int>, int>& table, const std::vector<int>& vs, bool closed, int len) {
        for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
            auto key = std::minmax(vs[i], vs[i + 1]);
            table[key] = std::max(table[key], len);
        }
        if (closed) {
            auto key = std::minmax(vs.front(), vs.back());
            table[key] = std::max(table[key], len);
        }
    };
    auto dfs = [&](auto&& self, int at) -> void {
        const int len = static_cast<int>(walk.size()) - 1;
        if (len >= 1) credit(w.path, walk, false, len);
        if (len >= 2 && g.adjacent(walk.front(), at)) credit(w.cycle, walk, true, len + 1);
        for (int x = 0; x < n; ++x)
            if (!used[x] && g.adjacent(at, x)) {
                used[x] = true;
                walk.push_back(x);
                self(self, x);
                walk.pop_back();
                used[x] = false;
            }
    };
    for (int s = 0; s < n; ++s) {
        used[s] = true;
        walk = {s};
        dfs(dfs, s);
        used[s] = false;
    }
    return w;
}

/// Upper-triangle adjacency code after relabelling by `perm` (new id i is old perm[i]).
inline std::uint64_t code(const Graph& g, const std::vector<int>& perm) {
    std::uint64_t c = 0;
    int bit = 0;
    for (int j = 1; j < g.num_vertices(); ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.adjacent(perm[i], perm[j])) c |= std::uint64_t{1} << bit;
    return c;
}

/// Isomorphism-invariant key: the minimum code over all n! labellings.
inline std::uint64_t canonical_code(const Graph& g) {
    std::vector<int> perm(g.num_vertices());
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        best = std::min(best, code(g, perm));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

inline Graph from_code(int n, std::uint64_t c) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if ((c >> bit) & 1U) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

/// Isomorphism classes on n vertices, from all 2^C(n,2) labelled graphs.
inline std::set<std::uint64_t> labelled_classes(int n) {
    std::set<std::uint64_t> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << pairs); ++c) classes.insert(canonical_code(from_code(n, c)));
    return classes;
}

/// graph6 short form written straight from the format description.
inline std::string graph6(const Graph& g) {
    const int n = g.num_vertices();
    std::string out(1, static_cast<char>(63 + n));
    std::vector<int> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
    while (bits.size() % 6 != 0) bits.push_back(0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (std::size_t b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
        out.push_back(static_cast<char>(63 + v));
    }
    return out;
}

inline bool components_are_cliques(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = s;
        while (!stack.empty()) {
            int a = stack.back();
            stack.pop_back();
            for (int b = 0; b < n; ++b)
                if (g.adjacent(a, b) && comp[b] < 0) {
                    comp[b] = s;
                    stack.push_back(b);
                }
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (comp[a] == comp[b] && !g.adjacent(a, b)) return false;
    return true;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

inline Graph path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
    return Graph::from_edge_list(n, edges);
}

inline Graph star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return Graph::from_edge_list(leaves + 1, edges);
}

/// Triangle 0-1-2 with a pendant vertex 3 on 0.
inline Graph paw() { return Graph::from_edge_list(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {0, 3}}); }

/// Disjoint union, b relabelled after a.
inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges;
    const int shift = a.num_vertices();
    for (int i = 0; i < a.num_vertices(); ++i)
        for (int j = i + 1; j < a.num_vertices(); ++j)
            if (a.adjacent(i, j)) edges.emplace_back(i, j);
    for (int i = 0; i < b.num_vertices(); ++i)
        for (int j = i + 1; j < b.num_vertices(); ++j)
            if (b.adjacent(i, j)) edges.emplace_back(i + shift, j + shift);
    return Graph::from_edge_list(shift + b.num_vertices(), edges);
}

/// Every graph on n vertices, one per labelled edge set (n <= 5 keeps this small).
inline std::vector<Graph> all_labelled(int n) {
    std::vector<Graph> out;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t c = 0; c < (std::uint64_t{1} << pairs); ++c) out.push_back(from_code(n, c));
    return out;
}

}  // namespace oracle
