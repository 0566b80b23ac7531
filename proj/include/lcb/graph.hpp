#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lcb {

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxGraph6Vertices = 62;

/// Malformed graph input. `position` is the offending element index (edge
/// list), byte offset (graph6) or 1-based line number (text streams).
class GraphError : public std::runtime_error {
public:
    explicit GraphError(const std::string& what, std::optional<std::size_t> position = std::nullopt)
        : std::runtime_error(what), position_(position) {}
    [[nodiscard]] std::optional<std::size_t> position() const { return position_; }

private:
    std::optional<std::size_t> position_;
};

/// Input is larger than an exact algorithm's configured size limit.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Subset of vertex ids 0..63 packed in one machine word.
class VertexSet {
public:
    class iterator {
    public:
        using value_type = int;
        using difference_type = std::ptrdiff_t;
        iterator() = default;
        explicit iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        bool operator==(const iterator&) const = default;

    private:
        std::uint64_t rest_ = 0;
    };

    constexpr VertexSet() = default;
    constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

    static constexpr VertexSet first_n(int n) {
        return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
    }
    static constexpr VertexSet single(int v) { return VertexSet(std::uint64_t{1} << v); }

    [[nodiscard]] constexpr bool contains(int v) const { return (bits_ >> v) & 1U; }
    constexpr void insert(int v) { bits_ |= std::uint64_t{1} << v; }
    constexpr void erase(int v) { bits_ &= ~(std::uint64_t{1} << v); }
    [[nodiscard]] constexpr int size() const { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }
    /// Smallest member; undefined on the empty set.
    [[nodiscard]] constexpr int first() const { return std::countr_zero(bits_); }
    [[nodiscard]] constexpr bool is_subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] std::vector<int> to_vector() const { return {begin(), end()}; }

    [[nodiscard]] iterator begin() const { return iterator(bits_); }
    [[nodiscard]] iterator end() const { return iterator(0); }

    friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
    friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
    friend constexpr VertexSet operator-(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & ~b.bits_); }
    constexpr VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
    constexpr VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
    constexpr VertexSet& operator-=(VertexSet o) { return *this = *this - o; }
    friend constexpr bool operator==(VertexSet, VertexSet) = default;

private:
    std::uint64_t bits_ = 0;
};

/// Undirected edge in canonical order u < v.
struct Edge {
    int u = 0;
    int v = 1;

    static Edge of(int a, int b) {
        if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
        return a < b ? Edge{a, b} : Edge{b, a};
    }
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple undirected graph on vertices 0..n-1 (n <= 64), one
/// adjacency bitset per vertex.
class Graph {
public:
    Graph() = default;
    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Duplicate pairs (in either orientation) collapse. Self-loops and
    /// out-of-range ids throw GraphError carrying the pair's index.
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edges(int n, std::span<const Edge> edges);
    /// Rows must be symmetric, loop-free and confined to 0..n-1.
    static Graph from_adjacency(std::vector<std::uint64_t> rows);

    [[nodiscard]] int num_vertices() const { return static_cast<int>(adj_.size()); }
    [[nodiscard]] int num_edges() const { return m_; }
    [[nodiscard]] VertexSet vertices() const { return VertexSet::first_n(num_vertices()); }
    [[nodiscard]] VertexSet neighbors(int v) const { return VertexSet(adj_[v]); }
    [[nodiscard]] int degree(int v) const { return std::popcount(adj_[v]); }
    [[nodiscard]] bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }
    [[nodiscard]] bool has_edge(Edge e) const;
    [[nodiscard]] int max_degree() const;
    [[nodiscard]] std::vector<int> degrees() const;
    /// All edges, ascending by (u, v).
    [[nodiscard]] std::vector<Edge> edges() const;
    [[nodiscard]] std::span<const std::uint64_t> rows() const { return adj_; }

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::uint64_t> adj_;
    int m_ = 0;
};

struct InducedSubgraph {
    Graph graph;
    /// original[i] is the id in the parent graph of new vertex i.
    std::vector<int> original;
};

/// Relabels the members of `s` to 0..|s|-1 in ascending order.
InducedSubgraph induced_subgraph(const Graph& g, VertexSet s);
Graph delete_vertex(const Graph& g, int v);
/// Removes the listed edges, keeping every vertex. Missing edges throw.
Graph delete_edges(const Graph& g, std::span<const Edge> edges);

/// Components ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);
/// Vertices reachable from `from` inside `within` (`from` must be in `within`).
VertexSet reachable(const Graph& g, int from, VertexSet within);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, VertexSet s);

/// graph6, short form (n <= 62). An optional ">>graph6<<" header is accepted.
Graph parse_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

/// "n m" header then m lines "u v", 0-indexed.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

std::string describe(const Graph& g);

}  // namespace lcb
