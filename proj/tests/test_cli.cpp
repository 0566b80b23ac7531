#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "lcb/enumerate.hpp"

namespace lcb::cli {
namespace {

struct Result {
    int code = 0;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args, const std::string& input = "") {
    args.insert(args.begin(), "lcb");
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run(args, in, out, err);
    return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

std::vector<nlohmann::json> lines(const std::string& text) {
    std::vector<nlohmann::json> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line))
        if (!line.empty()) out.push_back(nlohmann::json::parse(line));
    return out;
}

TEST(Analyze, CompleteGraphAtThree) {
    const auto r = call({"analyze", "C~", "--t", "3", "--output", "json"});
    ASSERT_EQ(r.code, kClean) << r.err;
    const auto doc = nlohmann::json::parse(r.out);
    const auto& order = doc["orders"][0];
    EXPECT_EQ(order["t"], 3);
    EXPECT_EQ(order["count"], 4);
    for (const auto& rep : order["reports"]) {
        EXPECT_EQ(rep["bound"]["num"], 4) << rep["kind"];
        EXPECT_EQ(rep["bound"]["den"], 1);
        if (!rep["certificate"].is_null()) EXPECT_TRUE(rep["certificate"]["holds"].get<bool>());
    }
    EXPECT_EQ(order["reports"].size(), 6U);
}

TEST(Analyze, PathEdgeListAtThree) {
    const auto path = temp_file("lcb_p4.txt", "4 3\n0 1\n1 2\n2 3\n");
    const auto r = call({"analyze", path.string(), "--t", "3", "-o", "json"});
    ASSERT_EQ(r.code, kClean) << r.err;
    const auto order = nlohmann::json::parse(r.out)["orders"][0];
    EXPECT_EQ(order["count"], 0);
    for (const auto& rep : order["reports"]) {
        if (rep["kind"] == "local_edge_path") {
            EXPECT_EQ(rep["bound"]["num"], 2);
            EXPECT_EQ(rep["bound"]["den"], 1);
        }
        if (rep["kind"] == "local_vertex") {
            EXPECT_EQ(rep["bound"]["num"], 2);
            EXPECT_EQ(rep["bound"]["den"], 3);
        }
    }
    std::filesystem::remove(path);
}

TEST(Analyze, TreeCycleBoundIsZero) {
    const auto r = call({"analyze", "-", "--t", "3", "-o", "json"}, "5 4\n0 1\n0 2\n0 3\n3 4\n");
    ASSERT_EQ(r.code, kClean) << r.err;
    for (const auto& rep : nlohmann::json::parse(r.out)["orders"][0]["reports"])
        if (rep["kind"] == "local_edge_cycle_conjecture") {
            EXPECT_EQ(rep["bound"]["num"], 0);
            EXPECT_EQ(rep["count"], 0);
            EXPECT_TRUE(rep["equality"].get<bool>());
            EXPECT_TRUE(rep["certificate"]["holds"].get<bool>());
        }
}

TEST(Analyze, HumanRationals) {
    const auto r = call({"analyze", "Bg", "--t", "3"});
    ASSERT_EQ(r.code, kClean);
    EXPECT_NE(r.out.find("1/3 (≈ 0.3333)"), std::string::npos) << r.out;
}

TEST(Analyze, DefaultRangeStopsAtMaxDegreePlusOne) {
    const auto r = call({"analyze", "C~", "-o", "json"});
    const auto orders = nlohmann::json::parse(r.out)["orders"];
    ASSERT_EQ(orders.size(), 3U);
    EXPECT_EQ(orders[0]["t"], 2);
    EXPECT_EQ(orders[2]["t"], 4);
    EXPECT_EQ(nlohmann::json::parse(call({"analyze", "C~", "-o", "json", "--all-t"}).out)["orders"].size(), 4U);
}

TEST(Analyze, Errors) {
    EXPECT_EQ(call({"analyze", "C~~"}).code, kUsage);
    EXPECT_EQ(call({"analyze", "C~", "--t", "3", "--t-min", "2"}).code, kUsage);
    EXPECT_EQ(call({"analyze", "C~", "--output", "xml"}).code, kUsage);
    EXPECT_EQ(call({}).code, kUsage);
    const auto big = call({"analyze", "-", "--format", "edgelist"}, "25 1\n0 1\n");
    EXPECT_EQ(big.code, kUsage);
    EXPECT_NE(big.err.find("cap"), std::string::npos);
}

TEST(Verify, CompleteGraphGivesFourEqualityRows) {
    const auto r = call({"verify", "-", "--t-min", "3", "--t-max", "3"}, "C~\n");
    ASSERT_EQ(r.code, kClean) << r.err;
    int equalities = 0;
    for (const auto& f : lines(r.out)) equalities += f["category"] == "EQUALITY_INSTANCE";
    EXPECT_EQ(equalities, 4);
}

TEST(Verify, MalformedLineIsNamed) {
    const auto r = call({"verify", "-"}, "C~\nBw\nC~~\n");
    EXPECT_EQ(r.code, kUsage);
    EXPECT_NE(r.err.find("line 3"), std::string::npos) << r.err;
}

TEST(Verify, ExhaustiveSixIsClean) {
    const auto r = call({"verify", "--exhaustive", "6", "--kinds", "vertex,edge,total"});
    EXPECT_EQ(r.code, kClean) << r.err;
    for (const auto& f : lines(r.out)) EXPECT_NE(f["category"], "BOUND_VIOLATION");
}

TEST(Verify, FailOnDiscrepancy) {
    const auto r = call({"verify", "--exhaustive", "4", "--t-min", "2", "--t-max", "2", "--fail-on", "discrepancy"});
    EXPECT_EQ(r.code, kFindings);
    EXPECT_EQ(call({"verify", "--exhaustive", "4", "--t-min", "3", "--fail-on", "discrepancy"}).code, kClean);
}

TEST(Verify, OutputFiles) {
    const auto dir = std::filesystem::temp_directory_path();
    const auto findings = dir / "lcb_findings.jsonl";
    const auto summary = dir / "lcb_summary.json";
    const auto csv = dir / "lcb_slack.csv";
    const auto r = call({"verify", "--exhaustive", "4", "--findings", findings.string(), "--summary",
                         summary.string(), "--csv", csv.string(), "--jobs", "3"});
    ASSERT_EQ(r.code, kClean) << r.err;
    EXPECT_TRUE(r.out.empty());
    std::ifstream s(summary);
    const auto doc = nlohmann::json::parse(s);
    EXPECT_EQ(doc["graphs"], 1 + 2 + 4 + 11);
    std::ifstream c(csv);
    std::string header;
    std::getline(c, header);
    EXPECT_EQ(header, "graph6,n,m,t,kind,count,bound_num,bound_den,equality,certificate");
    std::filesystem::remove(findings);
    std::filesystem::remove(summary);
    std::filesystem::remove(csv);
}

TEST(Verify, MissingInput) {
    EXPECT_EQ(call({"verify"}).code, kUsage);
    EXPECT_EQ(call({"verify", "/nonexistent/graphs.g6"}).code, kUsage);
    EXPECT_EQ(call({"verify", "-", "--kinds", "vertex,bogus"}, "C~\n").code, kUsage);
}

TEST(Search, ExhaustiveAndRandom) {
    const auto ex = call({"search", "--exhaustive-max", "5", "--kinds", "cycle"});
    EXPECT_EQ(ex.code, kClean) << ex.err;
    const auto a = call({"search", "--random", "gnp", "--n", "8", "--p", "0.5", "--count", "25", "--seed", "4"});
    const auto b = call({"search", "--random", "gnp", "--n", "8", "--p", "0.5", "--count", "25", "--seed", "4",
                         "--jobs", "4"});
    EXPECT_EQ(a.code, kClean) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto reg = call({"search", "--random", "regular", "--n", "8", "--degree", "3", "--count", "5"});
    EXPECT_EQ(reg.code, kClean) << reg.err;
    EXPECT_EQ(call({"search"}).code, kUsage);
    EXPECT_EQ(call({"search", "--random", "gnp", "--exhaustive-max", "4"}).code, kUsage);
}

TEST(Enumerate, PrintsOneLinePerClass) {
    const auto r = call({"enumerate", "4"});
    ASSERT_EQ(r.code, kClean);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 11);
    const auto c = call({"enumerate", "5", "--connected"});
    EXPECT_EQ(std::count(c.out.begin(), c.out.end(), '\n'), 21);
    EXPECT_EQ(call({"enumerate", "12"}).code, kUsage);
}

TEST(Oracle, Agreement) {
    const auto cl = call({"oracle", write_graph6(erdos_renyi(8, 0.5, 1)), "--mode", "cliques", "-o", "json"});
    EXPECT_EQ(cl.code, kClean) << cl.err;
    EXPECT_TRUE(nlohmann::json::parse(cl.out)["agree"].get<bool>());
    const auto pw = call({"oracle", "-", "--mode", "pweights", "-o", "json"}, "6 6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    ASSERT_EQ(pw.code, kClean) << pw.err;
    for (const auto& row : nlohmann::json::parse(pw.out)["rows"]) {
        EXPECT_EQ(row["p_fast"], 5);
        EXPECT_EQ(row["p_oracle"], 5);
    }
}

TEST(Oracle, CapError) {
    std::string edges = "30 29\n";
    for (int i = 0; i < 29; ++i) edges += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    const auto r = call({"oracle", "-", "--mode", "cliques"}, edges);
    EXPECT_EQ(r.code, kUsage);
    EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST(Help, ExitsCleanly) {
    const auto r = call({"--help"});
    EXPECT_EQ(r.code, kClean);
    EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
}  // namespace lcb::cli
