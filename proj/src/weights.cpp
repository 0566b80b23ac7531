#include "lcb/weights.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace lcb {

namespace {

void check_cap(const Graph& g, int cap, const char* what) {
    if (g.num_vertices() > cap)
        throw CapExceeded(std::string(what) + ": n=" + std::to_string(g.num_vertices()) +
                          " exceeds the exact-search cap of " + std::to_string(cap));
}

void check_edge(const Graph& g, Edge e) {
    if (!g.has_edge(e)) throw GraphError("(" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge");
}

/// Everything reachable from `seeds` while staying inside `within`.
VertexSet closure(const Graph& g, VertexSet seeds, VertexSet within) {
    VertexSet seen = seeds & within;
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int x : frontier) next |= g.neighbors(x);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

/// Two-sided search for p(uv): grow a path A out of u (avoiding v), and for
/// every A find the longest path B out of v in what is left.
class PathThroughEdge {
public:
    PathThroughEdge(const Graph& g, Edge e) : g_(g), u_(e.u), v_(e.v), limit_(g.num_vertices() - 2) {}

    int run() {
        grow_a(u_, VertexSet::single(u_) | VertexSet::single(v_), 0);
        return best_ + 1;
    }

private:
    void grow_a(int tip, VertexSet used, int len_a) {
        const VertexSet free = g_.vertices() - used;
        const VertexSet room = closure(g_, g_.neighbors(tip) | g_.neighbors(v_), free);
        if (len_a + room.size() <= best_) return;

        best_ = std::max(best_, len_a + longest_from(v_, free, std::max(0, best_ - len_a)));
        if (best_ == limit_) return;

        for (int w : g_.neighbors(tip) & free) {
            grow_a(w, used | VertexSet::single(w), len_a + 1);
            if (best_ == limit_) return;
        }
    }

    /// Longest path starting at `start` using only `free` vertices (besides
    /// start). Returns at least `floor`.
    int longest_from(int start, VertexSet free, int floor) const {
        int best = floor;
        const int ceiling = free.size();
        std::function<void(int, VertexSet, int)> walk = [&](int tip, VertexSet left, int len) {
            best = std::max(best, len);
            if (best == ceiling) return;
            if (len + closure(g_, g_.neighbors(tip), left).size() <= best) return;
            for (int w : g_.neighbors(tip) & left) {
                walk(w, left - VertexSet::single(w), len + 1);
                if (best == ceiling) return;
            }
        };
        walk(start, free, 0);
        return best;
    }

    const Graph& g_;
    int u_;
    int v_;
    int limit_;
    int best_ = 0;
};

/// Longest u-v path avoiding the edge uv itself; 0 when none exists.
class DetourSearch {
public:
    DetourSearch(const Graph& g, Edge e) : g_(g), u_(e.u), v_(e.v), limit_(g.num_vertices() - 1) {}

    int run() {
        walk(u_, VertexSet::single(u_), 0);
        return best_;
    }

private:
    void walk(int tip, VertexSet used, int len) {
        const VertexSet free = g_.vertices() - used;
        VertexSet seeds = g_.neighbors(tip);
        if (tip == u_) seeds.erase(v_);
        const VertexSet room = closure(g_, seeds, free);
        if (!room.contains(v_)) return;
        if (len + room.size() <= best_) return;
        for (int w : seeds & free) {
            if (w == v_) {
                best_ = std::max(best_, len + 1);
                continue;
            }
            walk(w, used | VertexSet::single(w), len + 1);
            if (best_ == limit_) return;
        }
    }

    const Graph& g_;
    int u_;
    int v_;
    int limit_;
    int best_ = 0;
};

std::size_t edge_slot(const std::vector<Edge>& edges, Edge e) {
    const auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw GraphError("edge not present in weight map");
    return static_cast<std::size_t>(it - edges.begin());
}

void finish(WeightMap& w) {
    w.longest_path = 0;
    w.circumference = 0;
    for (std::size_t i = 0; i < w.edges.size(); ++i) {
        w.longest_path = std::max(w.longest_path, w.path[i]);
        if (w.cycle[i] >= 3) w.circumference = std::max(w.circumference, w.cycle[i]);
    }
}

}  // namespace

int WeightMap::path_weight(Edge e) const { return path[edge_slot(edges, e)]; }
int WeightMap::cycle_weight(Edge e) const { return cycle[edge_slot(edges, e)]; }

int WeightMap::max_degree() const {
    return degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());
}

int longest_path_through_edge(const Graph& g, Edge e, int cap) {
    check_cap(g, cap, "longest_path_through_edge");
    check_edge(g, e);
    return PathThroughEdge(g, e).run();
}

int longest_cycle_through_edge(const Graph& g, Edge e, int cap) {
    check_cap(g, cap, "longest_cycle_through_edge");
    check_edge(g, e);
    const int detour = DetourSearch(g, e).run();
    return detour > 0 ? detour + 1 : 2;
}

WeightMap all_weights(const Graph& g, int cap) {
    check_cap(g, cap, "all_weights");
    WeightMap w;
    w.degrees = g.degrees();
    w.edges = g.edges();
    w.path.reserve(w.edges.size());
    w.cycle.reserve(w.edges.size());
    for (const Edge& e : w.edges) {
        w.path.push_back(PathThroughEdge(g, e).run());
        const int detour = DetourSearch(g, e).run();
        w.cycle.push_back(detour > 0 ? detour + 1 : 2);
    }
    finish(w);
    return w;
}

std::vector<VertexSet> BlockDecomposition::block_vertices() const {
    std::vector<VertexSet> out;
    out.reserve(blocks.size());
    for (const auto& block : blocks) {
        VertexSet s;
        for (const Edge& e : block) {
            s.insert(e.u);
            s.insert(e.v);
        }
        out.push_back(s);
    }
    return out;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> disc(static_cast<std::size_t>(n), 0);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> stack;
    BlockDecomposition out;
    int timer = 0;

    std::function<void(int, int)> visit = [&](int x, int parent) {
        disc[x] = low[x] = ++timer;
        int children = 0;
        for (int w : g.neighbors(x)) {
            if (disc[w] == 0) {
                ++children;
                stack.push_back(Edge::of(x, w));
                visit(w, x);
                low[x] = std::min(low[x], low[w]);
                if (low[w] >= disc[x]) {
                    if (parent != -1 || children > 1) out.articulation_points.insert(x);
                    std::vector<Edge> block;
                    const Edge tree_edge = Edge::of(x, w);
                    while (true) {
                        const Edge top = stack.back();
                        stack.pop_back();
                        block.push_back(top);
                        if (top == tree_edge) break;
                    }
                    std::sort(block.begin(), block.end());
                    out.blocks.push_back(std::move(block));
                }
            } else if (w != parent && disc[w] < disc[x]) {
                stack.push_back(Edge::of(x, w));
                low[x] = std::min(low[x], disc[w]);
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == 0) visit(v, -1);

    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
}

bool is_block_forest(const Graph& g) {
    const auto dec = block_decomposition(g);
    const auto vertex_sets = dec.block_vertices();
    for (std::size_t i = 0; i < dec.blocks.size(); ++i) {
        const std::size_t k = static_cast<std::size_t>(vertex_sets[i].size());
        if (dec.blocks[i].size() != k * (k - 1) / 2) return false;
    }
    return true;
}

namespace slow {

namespace {

/// ends[S] = set of vertices a such that some simple path from `root` has
/// vertex set exactly S and ends at a. `skip` is an edge the paths may not use.
std::vector<std::uint64_t> rooted_paths(const Graph& g, int root, const Edge* skip) {
    const int n = g.num_vertices();
    std::vector<std::uint64_t> ends(std::size_t{1} << n, 0);
    ends[std::size_t{1} << root] = std::uint64_t{1} << root;
    for (std::size_t s = 1; s < ends.size(); ++s) {
        if (ends[s] == 0) continue;
        for (int a : VertexSet(ends[s])) {
            for (int w : g.neighbors(a) - VertexSet(s)) {
                if (skip != nullptr && Edge::of(a, w) == *skip) continue;
                ends[s | (std::size_t{1} << w)] |= std::uint64_t{1} << w;
            }
        }
    }
    return ends;
}

}  // namespace

WeightMap subset_dp_weights(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kSubsetDpCap)
        throw CapExceeded("subset-DP oracle is limited to n <= " + std::to_string(kSubsetDpCap) + ", got n=" +
                          std::to_string(n));
    const std::size_t full = (std::size_t{1} << n) - 1;

    std::vector<std::vector<std::uint64_t>> from(static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) from[r] = rooted_paths(g, r, nullptr);

    WeightMap w;
    w.degrees = g.degrees();
    w.edges = g.edges();
    for (const Edge& e : w.edges) {
        const std::size_t bit_u = std::size_t{1} << e.u;
        const std::size_t bit_v = std::size_t{1} << e.v;

        // best_b[M] = most vertices on a path from v that avoids u and stays inside M.
        std::vector<int> best_b(full + 1, 0);
        for (std::size_t t = 0; t <= full; ++t)
            if (from[e.v][t] != 0 && (t & bit_u) == 0) best_b[t] = VertexSet(t).size();
        for (int bit = 0; bit < n; ++bit)
            for (std::size_t m = 0; m <= full; ++m)
                if (m & (std::size_t{1} << bit)) best_b[m] = std::max(best_b[m], best_b[m ^ (std::size_t{1} << bit)]);

        int p = 1;
        for (std::size_t s = 0; s <= full; ++s)
            if (from[e.u][s] != 0 && (s & bit_v) == 0)
                p = std::max(p, VertexSet(s).size() + best_b[full & ~s] - 1);
        w.path.push_back(p);

        const auto detours = rooted_paths(g, e.u, &e);
        int c = 2;
        for (std::size_t s = 0; s <= full; ++s)
            if (detours[s] & bit_v) c = std::max(c, VertexSet(s).size());
        w.cycle.push_back(c);
    }
    finish(w);
    return w;
}

}  // namespace slow

}  // namespace lcb
