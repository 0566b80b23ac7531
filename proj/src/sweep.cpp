#include "lcb/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <istream>
#include <limits>
#include <random>
#include <thread>
#include <tuple>

#include "lcb/enumerate.hpp"
#include "lcb/extremal.hpp"

namespace lcb {

namespace {

constexpr std::pair<SweepKind, std::string_view> kSweepKindNames[] = {
    {SweepKind::vertex, "vertex"}, {SweepKind::edge, "edge"}, {SweepKind::cycle, "cycle"}, {SweepKind::total, "total"}};

constexpr std::pair<FindingCategory, std::string_view> kCategoryNames[] = {
    {FindingCategory::bound_violation, "BOUND_VIOLATION"},
    {FindingCategory::conjecture_violation, "CONJECTURE_VIOLATION"},
    {FindingCategory::char_discrepancy, "CHAR_DISCREPANCY"},
    {FindingCategory::equality_instance, "EQUALITY_INSTANCE"},
    {FindingCategory::min_slack, "MIN_SLACK"},
};

SweepKind sweep_kind_of(BoundKind k) {
    switch (k) {
        case BoundKind::local_edge_path: return SweepKind::edge;
        case BoundKind::local_edge_cycle_conjecture: return SweepKind::cycle;
        case BoundKind::local_vertex_total: return SweepKind::total;
        default: return SweepKind::vertex;
    }
}

/// Which orders and kinds one graph is analyzed for.
struct Scope {
    int t_lo = 1;
    int t_hi = 0;
    bool total = false;
    bool vertex = false;
    bool edge = false;
    bool cycle = false;
};

Scope scope_of(const SearchConfig& cfg, int n) {
    Scope s;
    s.t_lo = std::max(1, cfg.t_min);
    s.t_hi = std::min(cfg.t_max, n);
    s.vertex = cfg.wants(SweepKind::vertex);
    s.edge = cfg.wants(SweepKind::edge);
    s.cycle = cfg.wants(SweepKind::cycle);
    s.total = cfg.wants(SweepKind::total);
    return s;
}

struct GraphOutcome {
    bool analyzed = false;
    std::optional<std::string> error;
    bool violation = false;
    std::vector<Finding> findings;
    std::vector<Evaluation> evaluations;
};

class GraphAnalysis {
public:
    GraphAnalysis(const Graph& g, std::size_t index, const Scope& scope, int weight_cap)
        : g_(g), index_(index), scope_(scope), weight_cap_(weight_cap) {}

    GraphOutcome run() && {
        out_.analyzed = true;
        graph6_ = write_graph6(g_);
        if (scope_.edge || scope_.cycle) weights_ = all_weights(g_, weight_cap_);
        for (int t = scope_.t_lo; t <= scope_.t_hi; ++t) {
            const Count count = count_cliques_total(g_, t);
            if (scope_.vertex) vertex_statement(t, count);
            if (t >= 2 && scope_.edge) edge_statement(t, count);
            if (t >= 2 && scope_.cycle) cycle_statement(t, count);
        }
        if (scope_.total) total_statement();
        return std::move(out_);
    }

private:
    Finding finding(FindingCategory c, int t, BoundKind k, Count count, const ExactRatio& bound) const {
        Finding f;
        f.category = c;
        f.graph6 = graph6_;
        f.n = g_.num_vertices();
        f.m = g_.num_edges();
        f.t = t;
        f.kind = k;
        f.count = count;
        f.bound = bound;
        f.slack = bound - ExactRatio(count);
        f.index = index_;
        return f;
    }

    void evaluate(int t, BoundKind k, Count count, const ExactRatio& bound, bool equality,
                  std::optional<bool> certificate) {
        Evaluation e;
        e.index = index_;
        e.graph6 = graph6_;
        e.n = g_.num_vertices();
        e.m = g_.num_edges();
        e.t = t;
        e.kind = k;
        e.count = count;
        e.bound = bound;
        e.equality = equality;
        e.certificate = certificate;
        out_.evaluations.push_back(std::move(e));
    }

    /// Shared tail of every statement: violation, equality, characterization.
    void judge(int t, BoundKind k, Count count, const ExactRatio& bound, Int lhs, Int rhs,
               std::optional<bool> certificate, std::optional<IffCheck> iff, FindingCategory violation) {
        const bool equality = lhs == rhs;
        evaluate(t, k, count, bound, equality, certificate);
        if (lhs > rhs) {
            auto f = finding(violation, t, k, count, bound);
            f.certificate = certificate;
            f.detail = "clique count exceeds bound";
            out_.findings.push_back(std::move(f));
            out_.violation = true;
        } else if (equality) {
            auto f = finding(FindingCategory::equality_instance, t, k, count, bound);
            f.equality = true;
            f.certificate = certificate;
            out_.findings.push_back(std::move(f));
        }
        if (iff && iff->is_discrepancy()) {
            auto f = finding(FindingCategory::char_discrepancy, t, k, count, bound);
            f.equality = iff->equality;
            f.certificate = iff->certificate;
            f.detail = iff->equality ? "bound tight but certificate fails" : "certificate holds but bound not tight";
            out_.findings.push_back(std::move(f));
        }
    }

    void dominance(int t, BoundKind k, Count count, const ExactRatio& local, const ExactRatio& classical,
                   std::string_view classical_name) {
        if (local <= classical) return;
        auto f = finding(FindingCategory::bound_violation, t, k, count, local);
        f.classical = classical;
        f.detail = std::string("localized bound exceeds ") + std::string(classical_name);
        out_.findings.push_back(std::move(f));
        out_.violation = true;
    }

    void vertex_statement(int t, Count count) {
        const Int sum = local_vertex_sum(g_, t);
        const ExactRatio bound(sum, t);
        std::optional<bool> certificate;
        std::optional<IffCheck> iff;
        if (t >= 2) {
            const VertexSet core = degree_core(g_, t);
            const Graph reduced = induced_subgraph(g_, core).graph;
            IffCheck check;
            check.applies = true;
            check.certificate = vertex_equality_certificate(g_, t, VertexReduction::core).holds;
            check.equality = checked_mul(t, count_cliques_total(reduced, t)) == local_vertex_sum(reduced, t);
            certificate = check.certificate;
            iff = check;
        }
        judge(t, BoundKind::local_vertex, count, bound, checked_mul(t, count), sum, certificate, iff,
              FindingCategory::bound_violation);
        if (t >= 2)
            dominance(t, BoundKind::local_vertex, count, bound, wood_bound(g_.num_vertices(), g_.max_degree(), t),
                      "wood_classical");
    }

    void edge_statement(int t, Count count) {
        const Int sum = local_edge_path_sum(*weights_, t);
        const Int scaled = checked_mul(binomial(t, 2), count);
        const ExactRatio bound(sum, binomial(t, 2));
        std::optional<bool> certificate;
        std::optional<IffCheck> iff;
        if (t >= 3) {
            certificate = edge_equality_certificate(g_, *weights_, t).holds;
            iff = IffCheck{scaled == sum, *certificate, true};
        }
        judge(t, BoundKind::local_edge_path, count, bound, scaled, sum, certificate, iff,
              FindingCategory::bound_violation);
        if (g_.num_edges() > 0)
            dominance(t, BoundKind::local_edge_path, count, bound,
                      cc_path_bound(g_.num_edges(), path_parameter(*weights_), t), "cc_path_classical");
    }

    void cycle_statement(int t, Count count) {
        const Int sum = local_edge_cycle_sum(*weights_, t);
        const Int scaled = checked_mul(binomial(t, 2), count);
        const ExactRatio bound(sum, binomial(t, 2));
        std::optional<bool> certificate;
        std::optional<IffCheck> iff;
        if (t >= 3) {
            certificate = cycle_equality_certificate(g_, *weights_, t).holds;
            iff = IffCheck{scaled == sum, *certificate, true};
        }
        judge(t, BoundKind::local_edge_cycle_conjecture, count, bound, scaled, sum, certificate, iff,
              FindingCategory::conjecture_violation);
    }

    void total_statement() {
        const Count all = count_all_cliques(g_);
        const ExactRatio local = local_vertex_total_bound(g_);
        // Cross-multiplied comparison of all vs num/den.
        judge(0, BoundKind::local_vertex_total, all, local, checked_mul(all, local.den()), local.num(), std::nullopt,
              std::nullopt, FindingCategory::bound_violation);
        dominance(0, BoundKind::local_vertex_total, all, local, wood_total_bound(g_.num_vertices(), g_.max_degree()),
                  "wood_total");
    }

    const Graph& g_;
    std::size_t index_;
    Scope scope_;
    int weight_cap_;
    std::string graph6_;
    std::optional<WeightMap> weights_;
    GraphOutcome out_;
};

GraphOutcome analyze_one(const Graph& g, std::size_t index, const Scope& scope, int weight_cap) {
    try {
        return GraphAnalysis(g, index, scope, weight_cap).run();
    } catch (const std::exception& e) {
        GraphOutcome out;
        out.analyzed = true;
        out.error = e.what();
        return out;
    }
}

using CellKey = std::tuple<int, int, int>;

CellKey cell_key(int n, int t, BoundKind k) { return {n, t, static_cast<int>(k)}; }

}  // namespace

std::string_view to_string(SweepKind kind) {
    for (const auto& [k, name] : kSweepKindNames)
        if (k == kind) return name;
    return "unknown";
}

std::optional<SweepKind> parse_sweep_kind(std::string_view name) {
    for (const auto& [k, text] : kSweepKindNames)
        if (text == name) return k;
    return std::nullopt;
}

std::string_view to_string(FindingCategory c) {
    for (const auto& [k, name] : kCategoryNames)
        if (k == c) return name;
    return "unknown";
}

std::optional<FindingCategory> parse_finding_category(std::string_view name) {
    for (const auto& [k, text] : kCategoryNames)
        if (text == name) return k;
    return std::nullopt;
}

bool SearchConfig::wants(SweepKind k) const { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); }

std::int64_t SweepSummary::count(FindingCategory c) const {
    const auto it = findings.find(c);
    return it == findings.end() ? 0 : it->second;
}

GraphSource GraphSource::exhaustive(int n_min, int n_max) {
    GraphSource s;
    s.type = Type::exhaustive;
    s.n_min = n_min;
    s.n_max = n_max;
    return s;
}

GraphSource GraphSource::graph6_file(std::string path) {
    GraphSource s;
    s.type = Type::graph6_file;
    s.path = std::move(path);
    return s;
}

GraphSource GraphSource::gnp(int n, double p, int count, std::uint64_t seed) {
    GraphSource s;
    s.type = Type::random_gnp;
    s.n_min = s.n_max = n;
    s.p = p;
    s.count = count;
    s.seed = seed;
    return s;
}

GraphSource GraphSource::regular(int n, int d, int count, std::uint64_t seed) {
    GraphSource s;
    s.type = Type::random_regular;
    s.n_min = s.n_max = n;
    s.degree = d;
    s.count = count;
    s.seed = seed;
    return s;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_graph6(line));
        } catch (const GraphError& e) {
            throw GraphError("line " + std::to_string(line_no) + ": " + e.what(), line_no);
        }
    }
    return out;
}

std::vector<Graph> load_graphs(const GraphSource& source, std::istream* standard_input) {
    std::vector<Graph> raw;
    switch (source.type) {
        case GraphSource::Type::exhaustive:
            for (int n = source.n_min; n <= source.n_max; ++n) {
                auto level = enumerate_graphs(n);
                raw.insert(raw.end(), std::make_move_iterator(level.begin()), std::make_move_iterator(level.end()));
            }
            break;
        case GraphSource::Type::graph6_file:
            if (source.path == "-") {
                if (standard_input == nullptr) throw std::invalid_argument("no standard input available");
                raw = read_graph6_stream(*standard_input);
            } else {
                std::ifstream file(source.path);
                if (!file) throw std::invalid_argument("cannot open " + source.path);
                raw = read_graph6_stream(file);
            }
            break;
        case GraphSource::Type::random_gnp:
        case GraphSource::Type::random_regular: {
            std::mt19937_64 seeds(source.seed);
            for (int i = 0; i < source.count; ++i) {
                const std::uint64_t seed = seeds();
                raw.push_back(source.type == GraphSource::Type::random_gnp
                                  ? erdos_renyi(source.n_min, source.p, seed)
                                  : random_regular(source.n_min, source.degree, seed));
            }
            break;
        }
    }
    std::vector<Graph> out;
    for (auto& g : raw) {
        if (source.connected_only && !is_connected(g)) continue;
        if (source.max_edges && g.num_edges() > *source.max_edges) continue;
        out.push_back(std::move(g));
    }
    return out;
}

SweepResult run_sweep(std::span<const Graph> graphs, const SearchConfig& config) {
    if (config.t_min < 1 || config.t_max < config.t_min)
        throw std::invalid_argument("sweep: t range must satisfy 1 <= t_min <= t_max");
    const std::size_t total = graphs.size();
    std::vector<GraphOutcome> outcomes(total);
    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> stop_at{std::numeric_limits<std::size_t>::max()};

    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= total) return;
            if (i > stop_at.load()) continue;
            outcomes[i] =
                analyze_one(graphs[i], i, scope_of(config, graphs[i].num_vertices()), config.weight_cap);
            if (config.stop_on_first && outcomes[i].violation) {
                std::size_t seen = stop_at.load();
                while (i < seen && !stop_at.compare_exchange_weak(seen, i)) {
                }
            }
        }
    };
    const int jobs = std::max(1, config.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }

    // Ordered merge.
    SweepResult result;
    auto& summary = result.summary;
    std::map<CellKey, CellStats> cells;
    std::map<CellKey, Evaluation> min_slack_eval;
    std::map<CellKey, std::size_t> equality_emitted;

    for (std::size_t i = 0; i < total; ++i) {
        GraphOutcome& o = outcomes[i];
        if (!o.analyzed) break;
        ++summary.graphs;
        if (o.error) {
            summary.errors.push_back(std::to_string(i) + ": " + *o.error);
            continue;
        }
        for (auto& e : o.evaluations) {
            ++summary.evaluations;
            const auto key = cell_key(e.n, e.t, e.kind);
            auto& cell = cells[key];
            cell.n = e.n;
            cell.t = e.t;
            cell.kind = e.kind;
            ++cell.graphs;
            if (e.equality) ++cell.equalities;
            const ExactRatio slack = e.bound - ExactRatio(e.count);
            if (slack > ExactRatio(0) && (!cell.min_positive_slack || slack < *cell.min_positive_slack)) {
                cell.min_positive_slack = slack;
                cell.min_slack_witness = e.graph6;
                min_slack_eval[key] = e;
            }
            if (config.keep_evaluations) result.evaluations.push_back(std::move(e));
        }
        for (auto& f : o.findings) {
            if (f.category == FindingCategory::equality_instance) {
                auto& emitted = equality_emitted[cell_key(f.n, f.t, f.kind)];
                if (emitted >= config.equality_cap) {
                    ++summary.suppressed_equalities;
                    continue;
                }
                ++emitted;
            }
            ++summary.findings[f.category];
            result.findings.push_back(std::move(f));
        }
        if (config.stop_on_first && o.violation) {
            summary.stopped_early = i + 1 < total;
            break;
        }
    }

    for (auto& [key, cell] : cells) {
        if (const auto it = min_slack_eval.find(key); it != min_slack_eval.end()) {
            const Evaluation& e = it->second;
            Finding f;
            f.category = FindingCategory::min_slack;
            f.graph6 = e.graph6;
            f.n = e.n;
            f.m = e.m;
            f.t = e.t;
            f.kind = e.kind;
            f.count = e.count;
            f.bound = e.bound;
            f.slack = e.bound - ExactRatio(e.count);
            f.equality = false;
            f.certificate = e.certificate;
            f.index = e.index;
            f.detail = "smallest positive slack in this (n, t, kind) cell";
            ++summary.findings[f.category];
            result.findings.push_back(std::move(f));
        }
        summary.cells.push_back(std::move(cell));
    }
    return result;
}

SweepResult run_sweep(const GraphSource& source, const SearchConfig& config) {
    const auto graphs = load_graphs(source);
    return run_sweep(graphs, config);
}

std::optional<std::string> replay_mismatch(const Finding& f, int weight_cap) {
    Graph g;
    try {
        g = parse_graph6(f.graph6);
    } catch (const GraphError& e) {
        return std::string("witness does not parse: ") + e.what();
    }
    if (g.num_vertices() != f.n || g.num_edges() != f.m) return "witness n/m differ from the finding";

    Scope scope;
    const SweepKind sk = sweep_kind_of(f.kind);
    if (sk == SweepKind::total) {
        scope.total = true;
    } else {
        scope.t_lo = scope.t_hi = f.t;
        scope.vertex = sk == SweepKind::vertex;
        scope.edge = sk == SweepKind::edge;
        scope.cycle = sk == SweepKind::cycle;
    }
    const auto outcome = analyze_one(g, f.index, scope, weight_cap);
    if (outcome.error) return "re-analysis failed: " + *outcome.error;

    if (f.category == FindingCategory::min_slack) {
        for (const auto& e : outcome.evaluations)
            if (e.t == f.t && e.kind == f.kind && e.count == f.count && e.bound == f.bound &&
                f.slack == e.bound - ExactRatio(e.count) && f.slack > ExactRatio(0))
                return std::nullopt;
        return "no evaluation reproduces the recorded slack";
    }
    for (const auto& r : outcome.findings)
        if (r.category == f.category && r.t == f.t && r.kind == f.kind && r.count == f.count && r.bound == f.bound &&
            r.slack == f.slack && r.equality == f.equality && r.certificate == f.certificate &&
            r.classical == f.classical)
            return std::nullopt;
    return std::string("re-analysis does not reproduce ") + std::string(to_string(f.category)) + " at t=" +
           std::to_string(f.t) + " for " + std::string(to_string(f.kind));
}

}  // namespace lcb
