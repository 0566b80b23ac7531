#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "lcb/bounds.hpp"
#include "lcb/cliques.hpp"
#include "lcb/enumerate.hpp"
#include "lcb/extremal.hpp"
#include "lcb/json.hpp"
#include "lcb/report.hpp"
#include "lcb/sweep.hpp"
#include "lcb/weights.hpp"

namespace lcb::cli {

namespace {

using nlohmann::ordered_json;

/// Raised for bad flag combinations detected after CLI11 parsing.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string slurp(std::istream& in) {
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool looks_like_edge_list(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream row(line);
        long long a = 0;
        long long b = 0;
        std::string rest;
        return static_cast<bool>(row >> a >> b) && !(row >> rest);
    }
    return false;
}

/// `spec` is "-" (stdin), an existing file, or a literal graph6 string.
Graph load_single(const std::string& spec, const std::string& format, std::istream& in) {
    std::string text;
    if (spec == "-") {
        text = slurp(in);
    } else if (std::filesystem::is_regular_file(spec)) {
        std::ifstream file(spec);
        text = slurp(file);
    } else {
        text = spec;
    }
    std::string fmt = format;
    if (fmt == "auto") fmt = looks_like_edge_list(text) ? "edgelist" : "graph6";
    std::istringstream is(text);
    if (fmt == "edgelist") return read_edge_list(is);
    auto graphs = read_graph6_stream(is);
    if (graphs.empty()) throw GraphError("no graph in input");
    if (graphs.size() > 1) throw UsageError("expected one graph, got " + std::to_string(graphs.size()));
    return graphs.front();
}

std::string human(const ExactRatio& r) {
    if (r.is_integer()) return r.str();
    std::ostringstream os;
    os << r.str() << " (≈ " << std::fixed << std::setprecision(4) << r.approx() << ")";
    return os.str();
}

std::string verdict_text(const IffCheck& c) {
    std::string s(to_string(c.verdict()));
    return c.applies ? s : s + " [not claimed]";
}

int default_jobs() {
    if (const char* env = std::getenv("LCB_JOBS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

// analyze ------------------------------------------------------------------

struct AnalyzeOptions {
    std::string graph;
    std::string format = "auto";
    std::optional<int> t;
    std::optional<int> t_min;
    std::optional<int> t_max;
    bool all_t = false;
    std::string output = "human";
    int cap = kDefaultExactCap;
};

bool is_theorem(BoundKind k) { return k != BoundKind::local_edge_cycle_conjecture; }

int run_analyze(const AnalyzeOptions& o, std::istream& in, std::ostream& out) {
    const Graph g = load_single(o.graph, o.format, in);
    const WeightMap w = all_weights(g, o.cap);
    const int n = g.num_vertices();

    int lo = 2;
    int hi = g.max_degree() + 1;
    if (o.all_t) {
        lo = 1;
        hi = n;
    }
    if (o.t) lo = hi = *o.t;
    if (o.t_min) lo = *o.t_min;
    if (o.t_max) hi = *o.t_max;
    if (lo < 1) throw UsageError("t must be >= 1");

    bool breach = false;
    const auto totals = total_reports(g);
    for (const auto& r : totals) breach |= r.slack < ExactRatio(0);

    struct Order {
        int t;
        std::vector<BoundReport> reports;
        std::optional<Dominance> dominance;
        CrossValidation cross;
    };
    std::vector<Order> orders;
    for (int t = lo; t <= hi; ++t) {
        Order ord{t, bound_reports(g, w, t), std::nullopt, cross_validate(g, w, t)};
        if (t >= 2) ord.dominance = compare_local_vs_classical(g, w, t);
        for (const auto& r : ord.reports) breach |= is_theorem(r.kind) && r.slack < ExactRatio(0);
        if (ord.dominance) breach |= !ord.dominance->holds();
        orders.push_back(std::move(ord));
    }

    if (o.output == "json") {
        ordered_json doc{{"graph6", write_graph6(g)}, {"n", n}, {"m", g.num_edges()}, {"weights", weights_json(w)}};
        ordered_json tot = ordered_json::array();
        for (const auto& r : totals) tot.push_back(report_json(r));
        doc["totals"] = std::move(tot);
        ordered_json per = ordered_json::array();
        for (const auto& ord : orders) {
            ordered_json reports = ordered_json::array();
            for (const auto& r : ord.reports) reports.push_back(report_json(r));
            per.push_back({{"t", ord.t},
                           {"count", int_json(ord.reports.front().count)},
                           {"reports", std::move(reports)},
                           {"dominance", ord.dominance ? dominance_json(*ord.dominance) : ordered_json(nullptr)},
                           {"cross_validation", cross_validation_json(ord.cross)}});
        }
        doc["orders"] = std::move(per);
        doc["invariant_breach"] = breach;
        out << doc.dump(2) << '\n';
        return breach ? kInvariantBreach : kClean;
    }

    out << "graph " << write_graph6(g) << "  n=" << n << " m=" << g.num_edges() << '\n';
    out << "degrees";
    for (int d : w.degrees) out << ' ' << d;
    out << "  (max " << w.max_degree() << ")\n";
    out << "longest path " << w.longest_path << ", circumference " << w.circumference << '\n';
    for (std::size_t i = 0; i < w.edges.size(); ++i)
        out << "  edge " << w.edges[i].u << '-' << w.edges[i].v << "  p=" << w.path[i] << " c=" << w.cycle[i] << '\n';

    auto print_report = [&](const BoundReport& r) {
        out << "  " << std::left << std::setw(28) << to_string(r.kind) << " bound " << human(r.bound) << "  slack "
            << human(r.slack) << "  equality " << (r.equality ? "yes" : "no");
        if (r.certificate) {
            out << "  certificate " << (r.certificate->holds ? "holds" : "fails");
            if (r.certificate->evidence) {
                out << " {";
                bool first = true;
                for (int v : *r.certificate->evidence) {
                    out << (first ? "" : ",") << v;
                    first = false;
                }
                out << '}';
            }
        }
        out << '\n';
    };

    out << "\nall orders: " << to_string(totals.front().count) << " cliques\n";
    for (const auto& r : totals) print_report(r);
    for (const auto& ord : orders) {
        out << "\nt=" << ord.t << ": " << to_string(ord.reports.front().count) << " copies of K_" << ord.t << '\n';
        for (const auto& r : ord.reports) print_report(r);
        if (ord.dominance) {
            const auto& d = *ord.dominance;
            out << "  dominance: local_vertex " << human(d.vertex.local) << (d.vertex.dominated() ? " <= " : " > ")
                << "wood " << human(d.vertex.classical);
            if (d.edge)
                out << "; local_edge_path " << human(d.edge->local) << (d.edge->dominated() ? " <= " : " > ")
                    << "cc_path(r=" << *d.path_r << ") " << human(d.edge->classical);
            out << '\n';
        }
        const auto& cv = ord.cross;
        out << "  cross-check: vertex " << verdict_text(cv.vertex) << " (single pass "
            << verdict_text(cv.vertex_single_pass) << ", unreduced " << verdict_text(cv.vertex_unreduced) << ")";
        if (cv.edge) out << "; edge " << verdict_text(*cv.edge);
        if (cv.cycle) out << "; cycle " << verdict_text(*cv.cycle);
        out << '\n';
    }
    if (breach) out << "\nINVARIANT BREACH: a proven bound or dominance relation failed\n";
    return breach ? kInvariantBreach : kClean;
}

// verify / search -------------------------------------------------------------

struct SweepOptions {
    int t_min = 1;
    int t_max = kMaxVertices;
    std::vector<std::string> kinds{"vertex", "edge", "cycle", "total"};
    int jobs = 1;
    std::string findings_path;
    std::string summary_path;
    std::string csv_path;
    std::size_t equality_cap = 100;
    bool stop_on_first = false;
    std::string fail_on = "none";
    int cap = kDefaultExactCap;
};

void add_sweep_options(CLI::App& cmd, SweepOptions& o) {
    cmd.add_option("--t-min", o.t_min, "smallest clique order")->check(CLI::PositiveNumber);
    cmd.add_option("--t-max", o.t_max, "largest clique order (clipped to n per graph)")->check(CLI::PositiveNumber);
    cmd.add_option("--kinds", o.kinds, "statements to check: vertex,edge,cycle,total")
        ->delimiter(',')
        ->check(CLI::IsMember({"vertex", "edge", "cycle", "total"}));
    cmd.add_option("-j,--jobs", o.jobs, "worker threads (default $LCB_JOBS or 1)")->check(CLI::PositiveNumber);
    cmd.add_option("--findings", o.findings_path, "findings JSON-lines file (default stdout)");
    cmd.add_option("--summary", o.summary_path, "summary JSON file (default: one line on stderr)");
    cmd.add_option("--csv", o.csv_path, "slack table CSV file");
    cmd.add_option("--equality-cap", o.equality_cap, "EQUALITY_INSTANCE findings kept per (n, t, kind)");
    cmd.add_flag("--stop-on-first", o.stop_on_first, "stop at the first bound or conjecture violation");
    cmd.add_option("--fail-on", o.fail_on, "exit 1 when these findings occur")
        ->check(CLI::IsMember({"none", "conjecture", "discrepancy", "any"}));
    cmd.add_option("--cap", o.cap, "vertex cap for exact path/cycle weights")->check(CLI::PositiveNumber);
}

int sweep_and_report(const std::vector<Graph>& graphs, const SweepOptions& o, std::ostream& out, std::ostream& err) {
    if (o.t_max < o.t_min) throw UsageError("--t-max must be >= --t-min");
    SearchConfig cfg;
    cfg.t_min = o.t_min;
    cfg.t_max = o.t_max;
    cfg.kinds.clear();
    for (const auto& k : o.kinds) cfg.kinds.push_back(*parse_sweep_kind(k));
    cfg.jobs = o.jobs;
    cfg.equality_cap = o.equality_cap;
    cfg.stop_on_first = o.stop_on_first;
    cfg.weight_cap = o.cap;
    cfg.keep_evaluations = !o.csv_path.empty();

    const SweepResult result = run_sweep(graphs, cfg);

    std::ofstream findings_file;
    if (!o.findings_path.empty()) {
        findings_file.open(o.findings_path);
        if (!findings_file) throw std::runtime_error("cannot write " + o.findings_path);
    }
    std::ostream& sink = o.findings_path.empty() ? out : findings_file;
    for (const auto& f : result.findings) sink << finding_json(f).dump() << '\n';

    const auto& s = result.summary;
    if (!o.summary_path.empty()) {
        std::ofstream file(o.summary_path);
        if (!file) throw std::runtime_error("cannot write " + o.summary_path);
        file << summary_json(s).dump(2) << '\n';
    } else {
        err << "graphs " << s.graphs << ", evaluations " << s.evaluations << ", bound violations "
            << s.count(FindingCategory::bound_violation) << ", conjecture violations "
            << s.count(FindingCategory::conjecture_violation) << ", discrepancies "
            << s.count(FindingCategory::char_discrepancy) << ", equality instances "
            << s.count(FindingCategory::equality_instance) << " (+" << s.suppressed_equalities << " suppressed)"
            << (s.stopped_early ? ", stopped early" : "") << '\n';
    }
    if (!o.csv_path.empty()) {
        std::ofstream file(o.csv_path);
        if (!file) throw std::runtime_error("cannot write " + o.csv_path);
        write_slack_csv(file, result.evaluations);
    }
    for (const auto& e : s.errors) err << "error: graph " << e << '\n';

    if (s.count(FindingCategory::bound_violation) > 0) return kInvariantBreach;
    if (!s.errors.empty()) return kUsage;
    const bool conj = s.count(FindingCategory::conjecture_violation) > 0;
    const bool disc = s.count(FindingCategory::char_discrepancy) > 0;
    if ((o.fail_on == "conjecture" && conj) || (o.fail_on == "discrepancy" && disc) ||
        (o.fail_on == "any" && (conj || disc)))
        return kFindings;
    return kClean;
}

// oracle -------------------------------------------------------------------

int run_oracle(const std::string& spec, const std::string& format, const std::string& mode,
               const std::string& output, std::istream& in, std::ostream& out) {
    const Graph g = load_single(spec, format, in);
    bool agree = true;
    ordered_json rows = ordered_json::array();
    if (mode == "cliques") {
        if (g.num_vertices() > slow::kNaiveCliqueCap)
            throw CapExceeded("oracle cliques: n=" + std::to_string(g.num_vertices()) + " exceeds the oracle cap of " +
                              std::to_string(slow::kNaiveCliqueCap));
        for (int t = 1; t <= std::max(1, g.num_vertices()); ++t) {
            const Count fast = count_cliques(g, t).total;
            const Count total_only = count_cliques_total(g, t);
            const Count naive = slow::naive_count_cliques(g, t);
            const bool ok = fast == naive && total_only == naive;
            agree &= ok;
            rows.push_back({{"t", t}, {"fast", int_json(fast)}, {"oracle", int_json(naive)}, {"agree", ok}});
        }
    } else {
        if (g.num_vertices() > slow::kSubsetDpCap)
            throw CapExceeded("oracle pweights: n=" + std::to_string(g.num_vertices()) +
                              " exceeds the oracle cap of " + std::to_string(slow::kSubsetDpCap));
        const WeightMap fast = all_weights(g);
        const WeightMap dp = slow::subset_dp_weights(g);
        for (std::size_t i = 0; i < fast.edges.size(); ++i) {
            const bool ok = fast.path[i] == dp.path[i] && fast.cycle[i] == dp.cycle[i];
            agree &= ok;
            rows.push_back({{"u", fast.edges[i].u},
                            {"v", fast.edges[i].v},
                            {"p_fast", fast.path[i]},
                            {"p_oracle", dp.path[i]},
                            {"c_fast", fast.cycle[i]},
                            {"c_oracle", dp.cycle[i]},
                            {"agree", ok}});
        }
    }
    if (output == "json") {
        out << ordered_json{{"graph6", write_graph6(g)}, {"mode", mode}, {"agree", agree}, {"rows", rows}}.dump(2)
            << '\n';
    } else {
        out << "oracle " << mode << " on " << write_graph6(g) << '\n';
        for (const auto& r : rows) {
            if (mode == "cliques")
                out << "  t=" << r["t"] << "  fast " << r["fast"] << "  oracle " << r["oracle"] << '\n';
            else
                out << "  " << r["u"] << '-' << r["v"] << "  p " << r["p_fast"] << '/' << r["p_oracle"] << "  c "
                    << r["c_fast"] << '/' << r["c_oracle"] << '\n';
        }
        out << (agree ? "agree" : "MISMATCH") << '\n';
    }
    return agree ? kClean : kInvariantBreach;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Localized clique bounds: exact clique counts, local weights, bound checks and searches"};
    app.require_subcommand(1);

    AnalyzeOptions analyze;
    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one graph");
    analyze_cmd->add_option("graph", analyze.graph, "graph6 string, file path, or - for stdin")->required();
    analyze_cmd->add_option("--format", analyze.format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    auto* t_opt = analyze_cmd->add_option("-t,--t", analyze.t, "single clique order")->check(CLI::PositiveNumber);
    auto* t_min_opt = analyze_cmd->add_option("--t-min", analyze.t_min, "smallest order (default 2)");
    auto* t_max_opt = analyze_cmd->add_option("--t-max", analyze.t_max, "largest order (default max degree + 1)");
    auto* all_opt = analyze_cmd->add_flag("--all-t", analyze.all_t, "orders 1..n");
    t_opt->excludes(t_min_opt)->excludes(t_max_opt)->excludes(all_opt);
    analyze_cmd->add_option("-o,--output", analyze.output, "human or json")->check(CLI::IsMember({"human", "json"}));
    analyze_cmd->add_option("--cap", analyze.cap, "vertex cap for exact path/cycle weights")
        ->check(CLI::PositiveNumber);

    SweepOptions verify;
    verify.jobs = default_jobs();
    std::string verify_input;
    std::optional<int> verify_exhaustive;
    auto* verify_cmd = app.add_subcommand("verify", "check the bounds on a graph6 stream");
    auto* input_opt = verify_cmd->add_option("input", verify_input, "graph6 file, or - for stdin");
    auto* exhaustive_opt =
        verify_cmd->add_option("--exhaustive", verify_exhaustive, "all graphs on 1..N vertices instead of a file");
    input_opt->excludes(exhaustive_opt);
    add_sweep_options(*verify_cmd, verify);

    SweepOptions search;
    search.jobs = default_jobs();
    search.fail_on = "conjecture";
    GraphSource source;
    std::optional<int> search_exhaustive;
    std::string random_model;
    int search_n = 8;
    bool connected = false;
    std::optional<int> max_edges;
    auto* search_cmd = app.add_subcommand("search", "hunt for violations and extremal graphs");
    auto* ex_opt = search_cmd->add_option("--exhaustive-max", search_exhaustive, "all graphs on n-min..N vertices");
    search_cmd->add_option("--n-min", source.n_min, "smallest n for --exhaustive-max");
    auto* random_opt = search_cmd->add_option("--random", random_model, "gnp or regular")
                           ->check(CLI::IsMember({"gnp", "regular"}));
    ex_opt->excludes(random_opt);
    search_cmd->add_option("--n", search_n, "vertices per random graph");
    search_cmd->add_option("--p", source.p, "edge probability for gnp")->check(CLI::Range(0.0, 1.0));
    search_cmd->add_option("--degree", source.degree, "degree for regular");
    search_cmd->add_option("--count", source.count, "number of random graphs")->check(CLI::PositiveNumber);
    search_cmd->add_option("--seed", source.seed, "random seed");
    search_cmd->add_flag("--connected", connected, "connected graphs only");
    search_cmd->add_option("--max-edges", max_edges, "skip graphs with more edges");
    add_sweep_options(*search_cmd, search);

    int enumerate_n = 0;
    bool enumerate_connected = false;
    auto* enumerate_cmd = app.add_subcommand("enumerate", "print one graph6 per isomorphism class");
    enumerate_cmd->add_option("n", enumerate_n, "vertex count")->required()->check(CLI::NonNegativeNumber);
    enumerate_cmd->add_flag("--connected", enumerate_connected, "connected graphs only");

    std::string oracle_graph;
    std::string oracle_format = "auto";
    std::string oracle_mode = "cliques";
    std::string oracle_output = "human";
    auto* oracle_cmd = app.add_subcommand("oracle", "compare fast algorithms with the slow oracles");
    oracle_cmd->add_option("graph", oracle_graph, "graph6 string, file path, or - for stdin")->required();
    oracle_cmd->add_option("--format", oracle_format, "input format")
        ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
    oracle_cmd->add_option("--mode", oracle_mode, "cliques or pweights")
        ->check(CLI::IsMember({"cliques", "pweights"}));
    oracle_cmd->add_option("-o,--output", oracle_output, "human or json")->check(CLI::IsMember({"human", "json"}));

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kClean;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kClean;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (*analyze_cmd) return run_analyze(analyze, in, out);
        if (*verify_cmd) {
            std::vector<Graph> graphs;
            if (verify_exhaustive) {
                graphs = load_graphs(GraphSource::exhaustive(1, *verify_exhaustive));
            } else if (!verify_input.empty()) {
                graphs = load_graphs(GraphSource::graph6_file(verify_input), &in);
            } else {
                throw UsageError("verify needs an input file, - for stdin, or --exhaustive N");
            }
            return sweep_and_report(graphs, verify, out, err);
        }
        if (*search_cmd) {
            if (search_exhaustive) {
                source.type = GraphSource::Type::exhaustive;
                source.n_max = *search_exhaustive;
            } else if (!random_model.empty()) {
                source.type = random_model == "gnp" ? GraphSource::Type::random_gnp
                                                    : GraphSource::Type::random_regular;
                source.n_min = source.n_max = search_n;
            } else {
                throw UsageError("search needs --exhaustive-max N or --random MODEL");
            }
            source.connected_only = connected;
            source.max_edges = max_edges;
            return sweep_and_report(load_graphs(source), search, out, err);
        }
        if (*enumerate_cmd) {
            for (const Graph& g : enumerate_graphs(enumerate_n))
                if (!enumerate_connected || is_connected(g)) out << write_graph6(g) << '\n';
            return kClean;
        }
        if (*oracle_cmd) return run_oracle(oracle_graph, oracle_format, oracle_mode, oracle_output, in, out);
    } catch (const GraphError& e) {
        err << "input error: " << e.what() << '\n';
        return kUsage;
    } catch (const CapExceeded& e) {
        err << "cap exceeded: " << e.what() << '\n';
        return kUsage;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvariantBreach;
    }
    return kUsage;
}

}  // namespace lcb::cli
