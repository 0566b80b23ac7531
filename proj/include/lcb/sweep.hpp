#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcb/bounds.hpp"
#include "lcb/cliques.hpp"
#include "lcb/graph.hpp"

namespace lcb {

/// Which localized statements a sweep checks.
enum class SweepKind {
    vertex,  ///< local_vertex, plus dominance over the degree bound
    edge,    ///< local_edge_path, plus dominance over the path bound
    cycle,   ///< local_edge_cycle_conjecture
    total,   ///< local_vertex_total over cliques of every order
};

std::string_view to_string(SweepKind kind);
std::optional<SweepKind> parse_sweep_kind(std::string_view name);
inline constexpr SweepKind kAllSweepKinds[] = {SweepKind::vertex, SweepKind::edge, SweepKind::cycle, SweepKind::total};

struct GraphSource {
    enum class Type { exhaustive, graph6_file, random_gnp, random_regular };

    Type type = Type::exhaustive;
    int n_min = 1;
    int n_max = 1;
    /// graph6_file: path, or "-" for stdin.
    std::string path;
    double p = 0.5;
    int degree = 3;
    int count = 1;
    std::uint64_t seed = 1;

    bool connected_only = false;
    std::optional<int> max_edges;

    static GraphSource exhaustive(int n_min, int n_max);
    static GraphSource graph6_file(std::string path);
    static GraphSource gnp(int n, double p, int count, std::uint64_t seed);
    static GraphSource regular(int n, int d, int count, std::uint64_t seed);
};

/// Reads one graph6 per non-blank line. Parse errors name the 1-based line.
std::vector<Graph> read_graph6_stream(std::istream& in);
/// Materializes a source in its deterministic order, applying filters.
std::vector<Graph> load_graphs(const GraphSource& source, std::istream* standard_input = nullptr);

struct SearchConfig {
    int t_min = 1;
    /// Clipped to n for each graph (beyond n both sides vanish).
    int t_max = kMaxVertices;
    std::vector<SweepKind> kinds{std::begin(kAllSweepKinds), std::end(kAllSweepKinds)};
    int jobs = 1;
    /// EQUALITY_INSTANCE findings kept per (n, t, kind).
    std::size_t equality_cap = 100;
    /// Stop after the first BOUND_VIOLATION or CONJECTURE_VIOLATION in stream order.
    bool stop_on_first = false;
    int weight_cap = kDefaultExactCap;
    /// Keep one row per (graph, t, kind) evaluation for the CSV slack table.
    bool keep_evaluations = false;

    [[nodiscard]] bool wants(SweepKind k) const;
};

enum class FindingCategory { bound_violation, conjecture_violation, char_discrepancy, equality_instance, min_slack };
std::string_view to_string(FindingCategory c);
std::optional<FindingCategory> parse_finding_category(std::string_view name);

struct Finding {
    FindingCategory category = FindingCategory::equality_instance;
    std::string graph6;
    int n = 0;
    int m = 0;
    /// 0 for the all-orders kind.
    int t = 0;
    BoundKind kind = BoundKind::local_vertex;
    Count count = 0;
    ExactRatio bound;
    ExactRatio slack;
    bool equality = false;
    std::optional<bool> certificate;
    /// For dominance breaches: the classical bound the local one exceeded.
    std::optional<ExactRatio> classical;
    std::string detail;
    /// Position of the witness in the input stream.
    std::size_t index = 0;
};

/// One row of the slack table.
struct Evaluation {
    std::size_t index = 0;
    std::string graph6;
    int n = 0;
    int m = 0;
    int t = 0;
    BoundKind kind = BoundKind::local_vertex;
    Count count = 0;
    ExactRatio bound;
    bool equality = false;
    std::optional<bool> certificate;
};

struct CellStats {
    int n = 0;
    int t = 0;
    BoundKind kind = BoundKind::local_vertex;
    std::int64_t graphs = 0;
    std::int64_t equalities = 0;
    std::optional<ExactRatio> min_positive_slack;
    std::string min_slack_witness;
};

struct SweepSummary {
    std::int64_t graphs = 0;
    std::int64_t evaluations = 0;
    std::map<FindingCategory, std::int64_t> findings;
    std::int64_t suppressed_equalities = 0;
    std::vector<CellStats> cells;
    /// "index: message" for graphs that could not be analyzed.
    std::vector<std::string> errors;
    bool stopped_early = false;

    [[nodiscard]] std::int64_t count(FindingCategory c) const;
};

struct SweepResult {
    std::vector<Finding> findings;
    SweepSummary summary;
    std::vector<Evaluation> evaluations;
};

/// Output order depends only on the input order, never on config.jobs.
SweepResult run_sweep(std::span<const Graph> graphs, const SearchConfig& config);
SweepResult run_sweep(const GraphSource& source, const SearchConfig& config);

/// Re-analyzes the witness in isolation; returns a mismatch description, or
/// nothing when it reproduces the category, rationals and flags.
std::optional<std::string> replay_mismatch(const Finding& f, int weight_cap = kDefaultExactCap);

}  // namespace lcb
