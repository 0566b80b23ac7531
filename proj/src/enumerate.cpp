#include "lcb/enumerate.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <utility>

namespace lcb {

namespace {

/// Isomorphism-invariant colour refinement, seeded with degrees. Colours are
/// ranks of sorted signatures, so the ordered partition is canonical.
std::vector<int> refined_colours(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<int> colour = g.degrees();
    int classes = -1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            sig[v].first = colour[v];
            for (int w : g.neighbors(v)) sig[v].second.push_back(colour[w]);
            std::sort(sig[v].second.begin(), sig[v].second.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            colour[v] = static_cast<int>(std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
        if (static_cast<int>(distinct.size()) == classes) return colour;
        classes = static_cast<int>(distinct.size());
    }
}

/// Branch-and-bound over cell-respecting vertex orders. Column k of the
/// adjacency string holds the bits (perm[i], perm[k]) for i < k, so a
/// partial order fixes a prefix that can be compared against the best.
class CanonicalSearch {
public:
    explicit CanonicalSearch(const Graph& g)
        : g_(g), n_(g.num_vertices()), colour_(refined_colours(g)), cols_(n_), perm_(n_) {
        cell_of_position_ = colour_;
        std::sort(cell_of_position_.begin(), cell_of_position_.end());
    }

    std::vector<int> run() {
        descend(0, VertexSet());
        return best_perm_;
    }

private:
    void descend(int k, VertexSet used) {
        if (k == n_) {
            if (best_.empty() || cols_ > best_) {
                best_ = cols_;
                best_perm_ = perm_;
            }
            return;
        }
        for (int v = 0; v < n_; ++v) {
            if (used.contains(v) || colour_[v] != cell_of_position_[k]) continue;
            std::uint64_t col = 0;
            for (int i = 0; i < k; ++i) col = (col << 1) | (g_.adjacent(perm_[i], v) ? 1U : 0U);
            cols_[k] = col;
            if (!best_.empty() &&
                std::lexicographical_compare(cols_.begin(), cols_.begin() + k + 1, best_.begin(), best_.begin() + k + 1))
                continue;
            perm_[k] = v;
            descend(k + 1, used | VertexSet::single(v));
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> colour_;
    std::vector<int> cell_of_position_;
    std::vector<std::uint64_t> cols_;
    std::vector<int> perm_;
    std::vector<std::uint64_t> best_;
    std::vector<int> best_perm_;
};

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    while (true) {
        const std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

}  // namespace

Graph canonical_graph(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kCanonicalCap)
        throw CapExceeded("canonical_form is limited to n <= " + std::to_string(kCanonicalCap) + ", got n=" +
                          std::to_string(n));
    if (n <= 1) return g;
    const auto perm = CanonicalSearch(g).run();
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.adjacent(perm[a], perm[b])) rows[a] |= std::uint64_t{1} << b;
    return Graph::from_adjacency(std::move(rows));
}

std::string canonical_form(const Graph& g) { return write_graph6(canonical_graph(g)); }

std::vector<Graph> enumerate_graphs(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_graphs: n must be >= 0");
    if (n > kEnumerateCap)
        throw CapExceeded("built-in enumeration stops at n=" + std::to_string(kEnumerateCap) +
                          "; pipe graph6 from an external enumerator (e.g. nauty geng) for n=" + std::to_string(n));
    std::vector<Graph> level{Graph(0)};
    for (int k = 1; k <= n; ++k) {
        std::set<std::pair<int, std::string>> seen;
        std::vector<Graph> next;
        for (const Graph& h : level) {
            std::vector<std::uint64_t> base(h.rows().begin(), h.rows().end());
            base.push_back(0);
            for (std::uint64_t s = 0; s < (std::uint64_t{1} << (k - 1)); ++s) {
                auto rows = base;
                rows[k - 1] = s;
                for (int v : VertexSet(s)) rows[v] |= std::uint64_t{1} << (k - 1);
                Graph canon = canonical_graph(Graph::from_adjacency(std::move(rows)));
                if (seen.emplace(canon.num_edges(), write_graph6(canon)).second) next.push_back(std::move(canon));
            }
        }
        std::sort(next.begin(), next.end(), [](const Graph& a, const Graph& b) {
            return std::pair(a.num_edges(), write_graph6(a)) < std::pair(b.num_edges(), write_graph6(b));
        });
        level = std::move(next);
    }
    return level;
}

Graph erdos_renyi(int n, double p, std::uint64_t seed) {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("erdos_renyi: p must lie in [0, 1]");
    (void)Graph(n);  // validates n
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (uniform01(rng) < p) edges.emplace_back(i, j);
    return Graph::from_edge_list(n, edges);
}

Graph random_regular(int n, int d, std::uint64_t seed) {
    (void)Graph(n);
    if (d < 0 || (n > 0 && d >= n) || (n * d) % 2 != 0)
        throw std::invalid_argument("random_regular: no simple " + std::to_string(d) + "-regular graph on " +
                                    std::to_string(n) + " vertices");
    std::mt19937_64 rng(seed);
    std::vector<int> points;
    for (int v = 0; v < n; ++v)
        for (int k = 0; k < d; ++k) points.push_back(v);
    constexpr int kAttempts = 100000;
    for (int attempt = 0; attempt < kAttempts; ++attempt) {
        for (std::size_t i = points.size(); i > 1; --i) std::swap(points[i - 1], points[uniform_below(rng, i)]);
        std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
        bool simple = true;
        for (std::size_t i = 0; i + 1 < points.size() && simple; i += 2) {
            const int a = points[i];
            const int b = points[i + 1];
            if (a == b || ((rows[a] >> b) & 1U)) simple = false;
            rows[a] |= std::uint64_t{1} << b;
            rows[b] |= std::uint64_t{1} << a;
        }
        if (simple) return Graph::from_adjacency(std::move(rows));
    }
    throw std::runtime_error("random_regular: no simple pairing after " + std::to_string(kAttempts) + " attempts");
}

}  // namespace lcb
