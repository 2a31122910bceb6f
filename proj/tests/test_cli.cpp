#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cliquemin/cli.hpp"
#include "cliquemin/graph_io.hpp"
#include "cliquemin/oracle.hpp"

using namespace cliquemin;
using nlohmann::json;

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cliquemin");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto o = invoke(std::move(args));
  json j = json::parse(o.out);
  EXPECT_EQ(j["status"].get<int>(), o.status);
  return j;
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "cliquemin_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST(Cli, ConstructTripartite) {
  const auto o = invoke({"construct", "--n", "12", "--beta", "1/3"});
  EXPECT_EQ(o.status, kExitOk);
  const json j = invoke_json({"construct", "--n", "12", "--beta", "1/3"});
  const Graph g = parse_graph6(j["result"]["graph6"].get<std::string>());
  EXPECT_TRUE(are_isomorphic(g, named::turan(12, 3)));
  bool saw_triangles = false;
  for (const auto& row : j["result"]["counts"]) {
    EXPECT_TRUE(row["match"].get<bool>());
    if (row["r"] == 3) {
      EXPECT_EQ(row["k_r"].get<int>(), 64);
      saw_triangles = true;
    }
  }
  EXPECT_TRUE(saw_triangles);
  EXPECT_NE(o.out.find(j["result"]["graph6"].get<std::string>()), std::string::npos);
}

TEST(Cli, UniquenessSmall) {
  const json j = invoke_json({"uniqueness", "--n", "6", "--beta", "1/3", "--r", "3"});
  EXPECT_EQ(j["status"], kExitOk);
  const auto& rep = j["result"]["reports"][0];
  EXPECT_EQ(rep["lhs"], "8");
  EXPECT_TRUE(rep["equality"].get<bool>());
  EXPECT_TRUE(rep["conditions"]["every extremal graph is a family member"].get<bool>());
}

TEST(Cli, VerifyP3OnConstruction) {
  const json j = invoke_json({"verify", "--suite", "p3", "--n", "8", "--beta", "1/4", "--construct"});
  EXPECT_EQ(j["status"], kExitOk);
  bool saw_ratio = false;
  for (const auto& rep : j["result"]["reports"]) {
    EXPECT_TRUE(rep["ok"].get<bool>()) << rep.dump();
    if (rep["check_id"] == "ratio-chain") {
      saw_ratio = true;
      for (const auto& part : rep["parts"]) EXPECT_TRUE(part["equality"].get<bool>());
    }
  }
  EXPECT_TRUE(saw_ratio);
}

TEST(Cli, VerifyGraphFile) {
  const auto path = scratch("k222.txt");
  std::ofstream(path) << "6 12\n0 2\n0 3\n0 4\n0 5\n1 2\n1 3\n1 4\n1 5\n2 4\n2 5\n3 4\n3 5\n";
  const auto o = invoke({"verify", "--graph", path.string(), "--beta", "1/3"});
  EXPECT_EQ(o.status, kExitOk) << o.err;
  EXPECT_EQ(o.out.find("FAIL"), std::string::npos);
  const auto pairs = invoke({"verify", "--graph", path.string(), "--beta", "1/3", "--suite", "ratio", "--pairs", "2:3"});
  EXPECT_EQ(pairs.status, kExitOk) << pairs.err;
}

TEST(Cli, CountAndBrute) {
  const auto path = scratch("c5.g6");
  std::ofstream(path) << serialize_graph6(named::cycle(5)) << '\n';
  const json counts = invoke_json({"count", "--graph", path.string()});
  EXPECT_EQ(counts["status"], kExitOk);
  EXPECT_NE(counts["result"].dump().find("\"k_r\":5"), std::string::npos);

  const json brute = invoke_json({"brute", "--n", "6", "--delta", "4", "--r", "3"});
  EXPECT_EQ(brute["result"]["minimum"], 8);
  const json at_least = invoke_json({"brute", "--n", "6", "--beta", "1/3", "--r", "3", "--mode", "at-least"});
  EXPECT_EQ(at_least["result"]["minimum"], 8);
}

TEST(Cli, GrTableAndCsv) {
  const auto o = invoke({"gr", "--beta", "2/7", "--format", "csv"});
  EXPECT_EQ(o.status, kExitOk);
  std::istringstream lines(o.out);
  std::string line;
  std::size_t columns = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto commas = static_cast<std::size_t>(std::count(line.begin(), line.end(), ','));
    if (columns == 0) columns = commas;
    EXPECT_EQ(commas, columns) << line;
  }
  EXPECT_GT(columns, 0u);
}

TEST(Cli, SweepAndEpsilon) {
  const json sweep = invoke_json({"sweep", "--n", "12", "--beta", "2/7", "--trials", "8", "--seed", "5"});
  EXPECT_EQ(sweep["status"], kExitOk);
  const json eps = invoke_json({"epsilon", "--p", "3", "--resolution", "1/1000"});
  EXPECT_EQ(eps["status"], kExitOk);
}

TEST(Cli, ViolationExitStatus) {
  // A scan step wider than the certified region certifies nothing.
  const auto o = invoke({"epsilon", "--p", "3", "--resolution", "1/12"});
  EXPECT_EQ(o.status, kExitViolation);
  EXPECT_NE(o.out.find("status: violation"), std::string::npos);
}

TEST(Cli, ErrorExitStatus) {
  EXPECT_EQ(invoke({"construct", "--n", "12", "--beta", "0.25"}).status, kExitError);
  EXPECT_EQ(invoke({"construct", "--n", "5", "--beta", "2/5"}).status, kExitError);
  EXPECT_EQ(invoke({"construct", "--n", "10", "--beta", "1/3"}).status, kExitError);
  EXPECT_EQ(invoke({"verify", "--construct"}).status, kExitError);
  EXPECT_EQ(invoke({"brute", "--n", "12", "--delta", "8", "--r", "3"}).status, kExitError);
  EXPECT_EQ(invoke({"frobnicate"}).status, kExitError);
  EXPECT_EQ(invoke({}).status, kExitError);
  EXPECT_EQ(invoke({"count", "--graph", scratch("missing.g6").string()}).status, kExitError);
  EXPECT_EQ(invoke({"verify", "--n", "8", "--beta", "1/4", "--construct", "--suite", "ratio", "--pairs", "2-3"}).status,
            kExitError);
  const auto msg = invoke({"construct", "--n", "12", "--beta", "0.25"});
  EXPECT_FALSE(msg.err.empty());
}

TEST(Cli, ByteIdenticalReruns) {
  for (const auto& format : {"text", "json", "csv"}) {
    const std::vector<std::string> args = {"sweep", "--n", "12", "--beta", "1/4", "--trials", "6", "--seed", "11", "--format", format};
    EXPECT_EQ(invoke(args).out, invoke(args).out) << format;
  }
}

TEST(Cli, OutputFile) {
  const auto path = scratch("report.json");
  std::filesystem::remove(path);
  const auto o = invoke({"construct", "--n", "8", "--beta", "1/4", "--format", "json", "--output", path.string()});
  EXPECT_EQ(o.status, kExitOk);
  EXPECT_TRUE(o.out.empty());
  std::ifstream in(path);
  const json j = json::parse(in);
  EXPECT_EQ(j["tool"], "cliquemin");
  EXPECT_EQ(j["config"]["n"], 8);
}
