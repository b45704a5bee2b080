#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace tesserae::cli {
namespace {

using json = nlohmann::json;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "tesserae");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = 0;
  const auto config = parse_args(static_cast<int>(argv.size()), argv.data(), out, err, code);
  if (config) code = dispatch(*config, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  const Outcome o = run(std::move(args));
  EXPECT_EQ(o.code, kExitOk) << o.err;
  return json::parse(o.out);
}

TEST(Cli, SeriesJsonContainsPaperTerm) {
  const json r = run_json({"series", "--tiles", "tromino-right", "--width", "4", "--length", "30"});
  ASSERT_EQ(r["series"].size(), 31u);
  EXPECT_EQ(r["series"][30], "26579488");
  EXPECT_EQ(r["series"][3], "4");
}

TEST(Cli, GfForTTetromino) {
  const json r = run_json({"gf", "--tiles", "tetromino-T", "--width", "4"});
  EXPECT_EQ(r["num"], json({"1", "-1"}));
  EXPECT_EQ(r["den"], json({"1", "-3"}));
  EXPECT_EQ(r["step"], 4);
  EXPECT_EQ(r["recurrence"]["valid_from"], 2);
}

TEST(Cli, IsingBound) {
  const json r = run_json({"ising-bound"});
  EXPECT_NEAR(r["sigma_lower"].get<double>(), 0.09501088358, 1e-11);
  EXPECT_NEAR(r["sigma_ising"].get<double>(), 0.8270269567, 1e-9);
  const Outcome text = run({"ising-bound"});
  EXPECT_NE(text.out.find("sigma_lower: 0.0950108835799\n"), std::string::npos);
}

TEST(Cli, IsingDecimalBeta) {
  const json r = run_json({"ising-bound", "--beta", "0", "--grid", "64"});
  EXPECT_NEAR(r["sigma_ising"].get<double>(), 0.69314718056, 1e-11);
  EXPECT_FALSE(r.contains("sigma_lower"));
  EXPECT_EQ(run({"ising-bound", "--beta", "0.9"}).code, kExitUsage);
  EXPECT_EQ(run({"ising-bound", "--beta", "hot"}).code, kExitUsage);
}

TEST(Cli, CountWidthSixIsZero) {
  const Outcome o = run({"count", "--tiles", "tetromino-T", "--width", "6", "--length", "8"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_NE(o.out.find("count: 0\n"), std::string::npos);
}

TEST(Cli, EntropyReportsBothBounds) {
  const json r = run_json({"entropy", "--tiles", "tromino-right", "--width", "5"});
  EXPECT_EQ(r["sites_per_step"], 15);
  EXPECT_NEAR(r["sigma_lower"].get<double>(), 0.1676508, 1e-6);
  EXPECT_NEAR(r["sigma_upper"].get<double>(), 0.462, 1e-3);
  EXPECT_EQ(r["lambda_decimal"], "12.36366722455963019234");
}

TEST(Cli, FaultfreeExpansion) {
  const json r = run_json({"faultfree", "--tiles", "tetromino-L", "--width", "4", "--length", "10"});
  EXPECT_EQ(r["expansion"], json({"2", "6", "10", "18", "38", "84", "186", "410", "904", "1994"}));
}

TEST(Cli, UpperAndFylfot) {
  EXPECT_NEAR(run_json({"upper", "--tiles", "tetromino-L"})["sigma_upper"].get<double>(), 0.520, 1e-3);
  EXPECT_EQ(run_json({"fylfot", "--width", "2", "--length", "2"})["sum"], "82");
  EXPECT_EQ(run({"fylfot", "--width", "5", "--length", "5"}).code, kExitUsage);
}

TEST(Cli, OracleAgrees) {
  const json r = run_json({"oracle", "--tiles", "tromino-right", "--width", "4", "--length", "6"});
  EXPECT_EQ(r["brute_force"], "18");
  EXPECT_EQ(r["automaton"], "18");
  EXPECT_EQ(r["agree"], true);
}

TEST(Cli, OracleRespectsCellCap) {
  ::setenv("TESSERAE_MAX_CELLS", "10", 1);
  const Outcome o = run({"oracle", "--tiles", "domino", "--width", "4", "--length", "4"});
  ::unsetenv("TESSERAE_MAX_CELLS");
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("limited to 10"), std::string::npos);
}

TEST(Cli, DotOutput) {
  const Outcome o = run({"automaton-dot", "--tiles", "domino", "--width", "1"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out.rfind("digraph automaton {", 0), 0u);
  const Outcome flag = run({"count", "--tiles", "domino", "--width", "1", "--dot"});
  EXPECT_EQ(flag.out, o.out);
}

TEST(Cli, TileFile) {
  const auto path = std::filesystem::temp_directory_path() / "tesserae_cli_test_tiles.txt";
  {
    std::ofstream f(path);
    f << "@symmetry: all\n##\n#.\n";
  }
  const json r = run_json({"count", "--tiles", path.string(), "--width", "4", "--length", "6"});
  EXPECT_EQ(r["count"], "18");
  std::filesystem::remove(path);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--width", "x"}).code, kExitUsage);
  EXPECT_EQ(run({"count", "--width", "4"}).code, kExitUsage);  // no --tiles
  EXPECT_EQ(run({"count", "--tiles", "no/such/file", "--width", "4"}).code, kExitBadTiles);
  EXPECT_EQ(run({"gf", "--tiles", "tetromino-T", "--width", "6"}).code, kExitNoTilings);
  EXPECT_EQ(run({"count", "--tiles", "domino", "--width", "0"}).code, kExitUsage);
  EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, BadTileFileContents) {
  const auto path = std::filesystem::temp_directory_path() / "tesserae_cli_bad_tiles.txt";
  {
    std::ofstream f(path);
    f << "#.#\n";
  }
  EXPECT_EQ(run({"count", "--tiles", path.string(), "--width", "4"}).code, kExitBadTiles);
  std::filesystem::remove(path);
}

TEST(Cli, JsonRoundTripIsByteIdentical) {
  const std::vector<std::vector<std::string>> lines{
      {"series", "--tiles", "tromino-right", "--width", "5", "--length", "20"},
      {"gf", "--tiles", "tetromino-L", "--width", "4"},
      {"faultfree", "--tiles", "tromino-right", "--width", "5"},
      {"entropy", "--tiles", "tetromino-T", "--width", "4"},
      {"ising-bound"},
      {"upper", "--tiles", "tromino-right"},
  };
  for (auto args : lines) {
    args.push_back("--json");
    const Outcome o = run(args);
    ASSERT_EQ(o.code, kExitOk) << o.err;
    EXPECT_EQ(json::parse(o.out).dump(2) + "\n", o.out) << args.front();
  }
}

TEST(Cli, BinaryRuns) {
  const std::string cmd = std::string(TESSERAE_BINARY) + " count --tiles tetromino-T --width 4 --length 12 > /dev/null";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  const std::string bad = std::string(TESSERAE_BINARY) + " gf --tiles tetromino-T --width 5 2> /dev/null";
  const int status = std::system(bad.c_str());
  EXPECT_EQ(WEXITSTATUS(status), kExitNoTilings);
}

}  // namespace
}  // namespace tesserae::cli
