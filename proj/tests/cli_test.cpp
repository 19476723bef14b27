#include "aenergy/cli.hpp"

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "aenergy/bounds.hpp"
#include "aenergy/graph_io.hpp"
#include "aenergy/spectra.hpp"

namespace aenergy {
namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

TEST(Cli, Spectrum) {
    EXPECT_EQ(run({"spectrum", "complete:4", "--alpha", "0.5", "--matrix", "aalpha"}).out, "3 1 1 1\n");
    EXPECT_EQ(run({"spectrum", "g6:A_", "--alpha", "0", "--matrix", "aalpha"}).out, "1 -1\n");
    auto lap = run({"spectrum", "cycle:9", "--matrix", "lap"});
    EXPECT_EQ(lap.code, kExitOk);
    std::istringstream in(lap.out);
    std::vector<double> values;
    for (double x; in >> x;) values.push_back(x);
    ASSERT_EQ(values.size(), 9u);
    EXPECT_NEAR(values.front(), 2 - 2 * std::cos(8 * std::acos(-1.0) / 9), 1e-9);
    EXPECT_NEAR(values.back(), 0.0, 1e-12);
}

TEST(Cli, Energy) {
    EXPECT_NE(run({"energy", "star:4", "--alpha", "0.5"}).out.find("energy 2.5\n"), std::string::npos);
    auto k4 = run({"energy", "complete:4", "--alpha", "0.5"}).out;
    EXPECT_NE(k4.find("energy 3\n"), std::string::npos);
    EXPECT_NE(k4.find("sigma 1\n"), std::string::npos);
    EXPECT_NE(run({"energy", "bipartite:2,2", "--alpha", "0.5"}).out.find("energy 2\n"), std::string::npos);
}

TEST(Cli, EnergyJsonRoundTripsExactly) {
    Graph g = generate_family(parse_family_spec("doublestar:5,3"));
    auto r = run({"energy", "doublestar:5,3", "--alpha", "0.37", "--format", "json"});
    ASSERT_EQ(r.code, kExitOk);
    auto j = nlohmann::json::parse(r.out);
    auto ref = energy(g, MatrixKind::a_alpha(0.37));
    EXPECT_EQ(j["energy"].get<double>(), ref.energy);
    EXPECT_EQ(j["mean_shift"].get<double>(), ref.mean_shift);
    EXPECT_EQ(j["spectrum"].get<std::vector<double>>(), ref.spectrum.values);
    EXPECT_EQ(j["graph6"], write_graph6(g));
}

TEST(Cli, Bounds) {
    auto s20 = run({"bounds", "star:20", "--alpha", "0.6"});
    EXPECT_EQ(s20.code, kExitOk);
    EXPECT_NE(s20.out.find("43.32"), std::string::npos);
    auto p10 = run({"bounds", "path:10", "--alpha", "0.9", "--format", "json"});
    auto j = nlohmann::json::parse(p10.out);
    bool seen = false;
    for (const auto& c : j["bounds"]) {
        if (c["bound_id"] == "LB_L42") {
            EXPECT_NEAR(c["value"].get<double>(), 0.76, 0.005);
            seen = true;
        }
    }
    EXPECT_TRUE(seen);
    auto c9 = run({"bounds", "cycle:9", "--alpha", "0.7", "--format", "json"});
    auto jc = nlohmann::json::parse(c9.out);
    EXPECT_NEAR(jc["energy"].get<double>(), 3.4553, 1e-4);
    auto csv = run({"bounds", "cycle:9", "--alpha", "0.7", "--format", "csv"});
    EXPECT_EQ(std::count(csv.out.begin(), csv.out.end(), '\n'), 1 + std::ptrdiff_t(kAllBoundIds.size()));
}

TEST(Cli, VerifyAndDeterminism) {
    auto a = run({"verify", "--max-n", "4", "--alphas", "0.5", "--format", "json"});
    auto b = run({"verify", "--max-n", "4", "--alphas", "0.5", "--format", "json", "--jobs", "3"});
    EXPECT_EQ(a.code, kExitOk);
    EXPECT_EQ(a.out, b.out);
    auto j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["violation_count"], 0);
    EXPECT_TRUE(j["ok"].get<bool>());
    EXPECT_EQ(j["bounds"].size(), kAllBoundIds.size());
    for (const auto& [id, stats] : j["bounds"].items()) {
        for (const char* key : {"count", "applicable", "min_slack", "argmin_graph6", "argmin_alpha", "violations"})
            EXPECT_TRUE(stats.contains(key)) << id << " " << key;
    }
    auto random = run({"verify", "--max-n", "0", "--random", "9,0.4,5,17", "--format", "csv"});
    EXPECT_EQ(random.code, kExitOk);
}

TEST(Cli, Reproduce) {
    auto t1 = run({"reproduce", "table1"});
    EXPECT_EQ(t1.code, kExitOk);
    for (const char* cell : {"2.25", "2.24", "4.89", "2.20", "2.78", "2.71", "7.00", "6.43", "2.68", "0.76"})
        EXPECT_NE(t1.out.find(cell), std::string::npos) << cell;
    auto r32 = run({"reproduce", "remark32", "--format", "json"});
    EXPECT_EQ(r32.code, kExitOk);
    auto j = nlohmann::json::parse(r32.out);
    EXPECT_EQ(j["rows"].size(), 2u);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--max-n", "8"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "hypercube:3"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "g6:A\x1f"}).code, kExitUsage);
    EXPECT_EQ(run({"bounds", "cycle:5", "--alpha", "1"}).code, kExitUsage);
    EXPECT_EQ(run({"energy", "cycle:5", "--alpha", "1.5"}).code, kExitUsage);
    EXPECT_EQ(run({"reproduce", "table9"}).code, kExitUsage);
    EXPECT_EQ(run({"verify", "--random", "9,2,5,17"}).code, kExitUsage);
    EXPECT_EQ(run({"spectrum", "file:/nonexistent/graph.txt"}).code, kExitUsage);
    auto err = run({"verify", "--max-n", "8"}).err;
    EXPECT_NE(err.find("CorpusTooLarge"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, FileInputs) {
    const std::string edges = ::testing::TempDir() + "aenergy_edges.txt";
    const std::string g6 = ::testing::TempDir() + "aenergy_g6.txt";
    std::ofstream(edges) << "# P_3\n3 2\n0 1\n1 2\n";
    std::ofstream(g6) << "A_\n";
    EXPECT_EQ(resolve_graph_spec("file:" + edges), make_graph(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(resolve_graph_spec("file:" + g6), make_graph(2, {{0, 1}}));
    EXPECT_EQ(run({"spectrum", "file:" + g6, "--matrix", "adj"}).out, "1 -1\n");
}

TEST(Cli, BinaryExitCodes) {
    auto status = [](const std::string& args) {
        std::string cmd = std::string(AENERGY_BINARY) + " " + args + " > /dev/null 2>&1";
        int raw = std::system(cmd.c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    EXPECT_EQ(status("reproduce table1"), kExitOk);
    EXPECT_EQ(status("verify --max-n 3"), kExitOk);
    EXPECT_EQ(status("verify --max-n 8"), kExitUsage);
    EXPECT_EQ(status("spectrum nonsense"), kExitUsage);
}

TEST(Cli, BinaryOutputMatchesInProcess) {
    std::string cmd = std::string(AENERGY_BINARY) + " spectrum complete:4 --alpha 0.5";
    FILE* pipe = popen(cmd.c_str(), "r");
    ASSERT_NE(pipe, nullptr);
    std::string out;
    std::array<char, 256> buf{};
    while (fgets(buf.data(), int(buf.size()), pipe)) out += buf.data();
    EXPECT_EQ(pclose(pipe), 0);
    EXPECT_EQ(out, "3 1 1 1\n");
}

}  // namespace
}  // namespace aenergy
