#include "lcb/graph.hpp"

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace lcb {

namespace {

void check_order(int n) {
    if (n < 0 || n > kMaxVertices)
        throw GraphError("vertex count " + std::to_string(n) + " outside 0.." + std::to_string(kMaxVertices));
}

constexpr std::string_view kGraph6Header = ">>graph6<<";

}  // namespace

Graph::Graph(int n) {
    check_order(n);
    adj_.assign(static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    Graph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(u) + "," + std::to_string(v) +
                                 ") has a vertex id outside 0.." + std::to_string(n - 1),
                             i);
        if (u == v) throw GraphError("edge " + std::to_string(i) + " is a self-loop at " + std::to_string(u), i);
        if (g.adjacent(u, v)) continue;
        g.adj_[u] |= std::uint64_t{1} << v;
        g.adj_[v] |= std::uint64_t{1} << u;
        ++g.m_;
    }
    return g;
}

Graph Graph::from_edges(int n, std::span<const Edge> edges) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(edges.size());
    for (const Edge& e : edges) pairs.emplace_back(e.u, e.v);
    return from_edge_list(n, pairs);
}

Graph Graph::from_adjacency(std::vector<std::uint64_t> rows) {
    const int n = static_cast<int>(rows.size());
    check_order(n);
    const std::uint64_t mask = VertexSet::first_n(n).bits();
    int degree_sum = 0;
    for (int v = 0; v < n; ++v) {
        if (rows[v] & ~mask) throw GraphError("row " + std::to_string(v) + " names a vertex >= n", v);
        if ((rows[v] >> v) & 1U) throw GraphError("self-loop at " + std::to_string(v), v);
        for (int w : VertexSet(rows[v]))
            if (!((rows[w] >> v) & 1U)) throw GraphError("asymmetric adjacency between " + std::to_string(v) +
                                                             " and " + std::to_string(w),
                                                         v);
        degree_sum += std::popcount(rows[v]);
    }
    Graph g;
    g.adj_ = std::move(rows);
    g.m_ = degree_sum / 2;
    return g;
}

bool Graph::has_edge(Edge e) const {
    return e.u >= 0 && e.v < num_vertices() && e.u != e.v && adjacent(e.u, e.v);
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < num_vertices(); ++v) d = std::max(d, degree(v));
    return d;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> d(adj_.size());
    for (int v = 0; v < num_vertices(); ++v) d[v] = degree(v);
    return d;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < num_vertices(); ++u)
        for (int v : neighbors(u) - VertexSet::first_n(u + 1)) out.push_back({u, v});
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet s) {
    if (!s.is_subset_of(g.vertices())) throw GraphError("induced_subgraph: set is not within the vertex range");
    InducedSubgraph out;
    out.original = s.to_vector();
    const int k = static_cast<int>(out.original.size());
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k), 0);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j)
            if (g.adjacent(out.original[i], out.original[j])) rows[i] |= std::uint64_t{1} << j;
    out.graph = Graph::from_adjacency(std::move(rows));
    return out;
}

Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("delete_vertex: no vertex " + std::to_string(v));
    return induced_subgraph(g, g.vertices() - VertexSet::single(v)).graph;
}

Graph delete_edges(const Graph& g, std::span<const Edge> edges) {
    std::vector<std::uint64_t> rows(g.rows().begin(), g.rows().end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Edge e = edges[i];
        if (!g.has_edge(e))
            throw GraphError("delete_edges: (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") is not an edge",
                             i);
        rows[e.u] &= ~(std::uint64_t{1} << e.v);
        rows[e.v] &= ~(std::uint64_t{1} << e.u);
    }
    return Graph::from_adjacency(std::move(rows));
}

VertexSet reachable(const Graph& g, int from, VertexSet within) {
    VertexSet seen = VertexSet::single(from);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & within) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    VertexSet left = g.vertices();
    while (!left.empty()) {
        VertexSet comp = reachable(g, left.first(), g.vertices());
        out.push_back(comp);
        left -= comp;
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

bool is_clique(const Graph& g, VertexSet s) {
    for (int v : s)
        if (!(s - VertexSet::single(v)).is_subset_of(g.neighbors(v))) return false;
    return true;
}

Graph parse_graph6(std::string_view text) {
    std::size_t offset = 0;
    if (text.starts_with(kGraph6Header)) offset = kGraph6Header.size();
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (offset >= text.size()) throw GraphError("graph6: empty input", offset);

    auto value_at = [&](std::size_t i) {
        const unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw GraphError("graph6: byte " + std::to_string(i) + " is not in the range 63..126", i);
        return static_cast<int>(c) - 63;
    };

    const int n = value_at(offset);
    if (n == 63) throw GraphError("graph6: long form (n > 62) is not supported", offset);
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t body = (bits + 5) / 6;
    if (text.size() - offset - 1 != body)
        throw GraphError("graph6: expected " + std::to_string(body) + " data bytes for n=" + std::to_string(n) +
                             ", got " + std::to_string(text.size() - offset - 1),
                         std::min(text.size(), offset + 1 + body));

    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const std::size_t pos = offset + 1 + k / 6;
            const int bit = 5 - static_cast<int>(k % 6);
            if ((value_at(pos) >> bit) & 1) {
                rows[i] |= std::uint64_t{1} << j;
                rows[j] |= std::uint64_t{1} << i;
            }
        }
    }
    if (body > 0) {
        const std::size_t last = offset + body;
        const int padding = static_cast<int>(body * 6 - bits);
        if (value_at(last) & ((1 << padding) - 1))
            throw GraphError("graph6: nonzero padding bits in the final byte", last);
    }
    return Graph::from_adjacency(std::move(rows));
}

std::string write_graph6(const Graph& g) {
    const int n = g.num_vertices();
    if (n > kMaxGraph6Vertices)
        throw GraphError("graph6: n=" + std::to_string(n) + " exceeds the short-form cap of " +
                         std::to_string(kMaxGraph6Vertices));
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>(63 + (acc << (6 - filled))));
    return out;
}

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    auto next_line = [&]() -> bool {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
        }
        return false;
    };
    if (!next_line()) throw GraphError("edge list: missing \"n m\" header", 1);
    std::istringstream header(line);
    long long n = -1;
    long long m = -1;
    if (!(header >> n >> m) || n < 0 || m < 0)
        throw GraphError("edge list: line " + std::to_string(line_no) + ": expected \"n m\"", line_no);
    if (n > kMaxVertices)
        throw GraphError("edge list: n=" + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices),
                         line_no);
    std::vector<std::pair<int, int>> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line())
            throw GraphError("edge list: expected " + std::to_string(m) + " edges, found " + std::to_string(i),
                             line_no + 1);
        std::istringstream row(line);
        long long u = -1;
        long long v = -1;
        std::string rest;
        if (!(row >> u >> v) || (row >> rest))
            throw GraphError("edge list: line " + std::to_string(line_no) + ": expected \"u v\"", line_no);
        if (u < 0 || v < 0 || u >= n || v >= n || u == v)
            throw GraphError("edge list: line " + std::to_string(line_no) + ": invalid edge (" + std::to_string(u) +
                                 "," + std::to_string(v) + ")",
                             line_no);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    return Graph::from_edge_list(static_cast<int>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string describe(const Graph& g) {
    std::ostringstream os;
    os << "n=" << g.num_vertices() << " m=" << g.num_edges() << " {";
    bool first = true;
    for (const Edge& e : g.edges()) {
        os << (first ? "" : " ") << e.u << '-' << e.v;
        first = false;
    }
    os << '}';
    return os.str();
}

}  // namespace lcb
