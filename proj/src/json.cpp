#include "lcb/json.hpp"

#include <limits>
#include <ostream>

namespace lcb {

using nlohmann::ordered_json;

ordered_json int_json(Int v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return to_string(v);
}

ordered_json ratio_json(const ExactRatio& r) {
    return {{"num", int_json(r.num())}, {"den", int_json(r.den())}, {"approx", r.approx()}};
}

ordered_json weights_json(const WeightMap& w) {
    ordered_json edges = ordered_json::array();
    for (std::size_t i = 0; i < w.edges.size(); ++i)
        edges.push_back({{"u", w.edges[i].u}, {"v", w.edges[i].v}, {"p", w.path[i]}, {"c", w.cycle[i]}});
    return {{"degrees", w.degrees},
            {"max_degree", w.max_degree()},
            {"longest_path", w.longest_path},
            {"circumference", w.circumference},
            {"edges", std::move(edges)}};
}

ordered_json certificate_json(const EqualityCertificate& c) {
    ordered_json out{{"kind", to_string(c.kind)},
                     {"holds", c.holds},
                     {"reduced_graph6", write_graph6(c.reduced)},
                     {"reduced_labels", c.reduced_labels}};
    out["evidence"] = c.evidence ? ordered_json(c.evidence->to_vector()) : ordered_json(nullptr);
    return out;
}

ordered_json report_json(const BoundReport& r) {
    ordered_json out{{"kind", to_string(r.kind)}};
    out["t"] = r.t == 0 ? ordered_json(nullptr) : ordered_json(r.t);
    out["count"] = int_json(r.count);
    out["bound"] = ratio_json(r.bound);
    out["slack"] = ratio_json(r.slack);
    out["equality"] = r.equality;
    out["certificate"] = r.certificate ? certificate_json(*r.certificate) : ordered_json(nullptr);
    return out;
}

ordered_json dominance_json(const Dominance& d) {
    ordered_json out{{"t", d.t},
                     {"max_degree", d.max_degree},
                     {"vertex",
                      {{"local", ratio_json(d.vertex.local)},
                       {"classical", ratio_json(d.vertex.classical)},
                       {"dominated", d.vertex.dominated()}}}};
    if (d.edge) {
        out["edge"] = {{"r", *d.path_r},
                       {"local", ratio_json(d.edge->local)},
                       {"classical", ratio_json(d.edge->classical)},
                       {"dominated", d.edge->dominated()}};
    } else {
        out["edge"] = nullptr;
    }
    out["holds"] = d.holds();
    return out;
}

namespace {

ordered_json iff_json(const IffCheck& c) {
    return {{"equality", c.equality},
            {"certificate", c.certificate},
            {"applies", c.applies},
            {"verdict", to_string(c.verdict())}};
}

}  // namespace

ordered_json cross_validation_json(const CrossValidation& cv) {
    ordered_json out{{"t", cv.t},
                     {"graph6", cv.graph6},
                     {"vertex", iff_json(cv.vertex)},
                     {"vertex_single_pass", iff_json(cv.vertex_single_pass)},
                     {"vertex_unreduced", iff_json(cv.vertex_unreduced)}};
    out["edge"] = cv.edge ? iff_json(*cv.edge) : ordered_json(nullptr);
    out["cycle"] = cv.cycle ? iff_json(*cv.cycle) : ordered_json(nullptr);
    return out;
}

ordered_json finding_json(const Finding& f) {
    ordered_json out{{"category", to_string(f.category)},
                     {"graph6", f.graph6},
                     {"index", f.index},
                     {"n", f.n},
                     {"m", f.m}};
    out["t"] = f.t == 0 ? ordered_json(nullptr) : ordered_json(f.t);
    out["kind"] = to_string(f.kind);
    out["count"] = int_json(f.count);
    out["bound"] = ratio_json(f.bound);
    out["slack"] = ratio_json(f.slack);
    out["equality"] = f.equality;
    out["certificate"] = f.certificate ? ordered_json(*f.certificate) : ordered_json(nullptr);
    out["classical"] = f.classical ? ratio_json(*f.classical) : ordered_json(nullptr);
    out["detail"] = f.detail;
    return out;
}

ordered_json summary_json(const SweepSummary& s) {
    ordered_json counts = ordered_json::object();
    for (auto c : {FindingCategory::bound_violation, FindingCategory::conjecture_violation,
                   FindingCategory::char_discrepancy, FindingCategory::equality_instance, FindingCategory::min_slack})
        counts[std::string(to_string(c))] = s.count(c);
    ordered_json cells = ordered_json::array();
    for (const auto& c : s.cells) {
        ordered_json cell{{"n", c.n}};
        cell["t"] = c.t == 0 ? ordered_json(nullptr) : ordered_json(c.t);
        cell["kind"] = to_string(c.kind);
        cell["graphs"] = c.graphs;
        cell["equalities"] = c.equalities;
        cell["min_positive_slack"] = c.min_positive_slack ? ratio_json(*c.min_positive_slack) : ordered_json(nullptr);
        cell["min_slack_witness"] = c.min_positive_slack ? ordered_json(c.min_slack_witness) : ordered_json(nullptr);
        cells.push_back(std::move(cell));
    }
    return {{"graphs", s.graphs},
            {"evaluations", s.evaluations},
            {"findings", std::move(counts)},
            {"suppressed_equalities", s.suppressed_equalities},
            {"stopped_early", s.stopped_early},
            {"errors", s.errors},
            {"cells", std::move(cells)}};
}

void write_slack_csv(std::ostream& out, std::span<const Evaluation> rows) {
    out << "graph6,n,m,t,kind,count,bound_num,bound_den,equality,certificate\n";
    for (const auto& r : rows) {
        // graph6 bytes are 63..126, so no quoting is needed.
        out << r.graph6 << ',' << r.n << ',' << r.m << ',' << r.t << ',' << to_string(r.kind) << ','
            << to_string(r.count) << ',' << to_string(r.bound.num()) << ',' << to_string(r.bound.den()) << ','
            << (r.equality ? "true" : "false") << ',';
        if (r.certificate) out << (*r.certificate ? "true" : "false");
        out << '\n';
    }
}

}  // namespace lcb
