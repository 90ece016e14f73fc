#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include <json.hpp>

#include "cli/run.hpp"

namespace fs = std::filesystem;
using netmed::cli::kExitConfig;
using netmed::cli::kExitData;
using netmed::cli::kExitDegenerate;
using netmed::cli::kExitOk;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "netmed");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = netmed::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("netmed_cli_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  fs::path operator/(const std::string& name) const { return path_ / name; }

 private:
  fs::path path_;
};

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

// A small three-layer multiplex with enough overlap for every command.
std::string toy_dataset() {
  std::ostringstream s;
  for (int i = 0; i < 14; ++i) {
    for (int j = i + 1; j < 14; ++j) {
      const int h = (i * 31 + j * 17) % 10;
      if (h < 5) s << "1 " << i << ' ' << j << ' ' << (h + 1) << '\n';
      if (h > 2 && h < 8) s << "2 " << i << ' ' << j << '\n';
      if (h % 3 == 0) s << "3 " << i << ' ' << j << '\n';
    }
  }
  return s.str();
}

}  // namespace

TEST(Cli, SimulateSummaryMatchesUncorrelatedExpectation) {
  const auto r = invoke({"simulate", "--model", "uncorrelated", "-N", "50", "-p", "0.5",
                         "--realizations", "1000", "--seed", "7", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["software"], "netmed");
  EXPECT_EQ(doc["seed"], 7);
  EXPECT_EQ(doc["skipped"], 0);
  EXPECT_EQ(doc["config"]["realizations"], 1000);
  const auto& summary = doc["tables"]["summary"];
  ASSERT_EQ(summary[0]["quantity"], "nj");
  EXPECT_NEAR(summary[0]["mean"].get<double>(), 1.0 / 3.0, 0.02);
}

TEST(Cli, CsvHasHeaderAndConfigEcho) {
  const auto r = invoke({"simulate", "--model", "mediated", "-N", "20", "-R", "5"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  bool saw_config = false, saw_header = false;
  while (std::getline(lines, line)) {
    if (line.rfind("# config: {", 0) == 0) saw_config = true;
    if (line == "realization,nj,nj_partial,delta") saw_header = true;
  }
  EXPECT_TRUE(saw_config);
  EXPECT_TRUE(saw_header);
}

TEST(Cli, FilesAreByteIdenticalAcrossRunsAndWorkers) {
  TempDir dir;
  const std::vector<std::string> base = {"triad", "--model", "interpolated", "--mu", "0.5",
                                         "-N", "40", "-R", "12", "--seed", "3"};
  auto with = [&](std::string out, std::string workers) {
    auto args = base;
    args.insert(args.end(), {"--workers", workers, "--out", (dir / out).string()});
    return invoke(args);
  };
  ASSERT_EQ(with("one.csv", "1").code, kExitOk);
  ASSERT_EQ(with("two.csv", "1").code, kExitOk);
  ASSERT_EQ(with("three.csv", "3").code, kExitOk);
  EXPECT_EQ(slurp(dir / "one.csv"), slurp(dir / "two.csv"));
  EXPECT_EQ(slurp(dir / "one.csv"), slurp(dir / "three.csv"));
  EXPECT_EQ(slurp(dir / "one.ensembles.csv"), slurp(dir / "three.ensembles.csv"));
  EXPECT_FALSE(fs::exists(dir / "one.csv.tmp"));
}

TEST(Cli, MediatedTriadReport) {
  const auto r = invoke({"triad", "--model", "mediated", "-N", "100", "-p", "0.5", "-R", "40",
                         "--fixed-roles", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& report = doc["reports"][0];
  EXPECT_GT(report["m_bar"].get<double>(), 0.0);
  EXPECT_GT(report["sigma_s"].get<double>(), 3.0);
  EXPECT_TRUE(report.contains("ensembles"));
}

TEST(Cli, DatasetCommands) {
  TempDir dir;
  write(dir / "toy.edges", toy_dataset());
  const std::string data = (dir / "toy.edges").string();

  const auto pairs = invoke({"pairwise-null", "--dataset", data, "-R", "20", "--format", "json"});
  ASSERT_EQ(pairs.code, kExitOk) << pairs.err;
  EXPECT_EQ(nlohmann::json::parse(pairs.out)["tables"]["pairs"].size(), 3u);

  const auto triad = invoke({"triad", "--dataset", data, "--layers", "1,2,3", "-R", "10",
                             "--format", "json"});
  ASSERT_EQ(triad.code, kExitOk) << triad.err;
  const auto rows = nlohmann::json::parse(triad.out)["tables"]["triads"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0]["c"], "3");
  EXPECT_EQ(rows[1]["c"], "1");
  EXPECT_EQ(rows[2]["c"], "2");

  const auto rssi = invoke({"rssi-sweep", "--dataset", data, "--window-layer", "1", "--layers",
                            "2,3", "-k", "3", "-R", "10", "--format", "json"});
  ASSERT_EQ(rssi.code, kExitOk) << rssi.err;
  EXPECT_EQ(nlohmann::json::parse(rssi.out)["tables"]["windows"].size(), 3u);
}

TEST(Cli, SweepMu) {
  const auto r = invoke({"sweep-mu", "-N", "40", "-R", "10", "--mu-steps", "3", "--p-values",
                         "0.5", "--rewire", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = nlohmann::json::parse(r.out)["tables"]["sweep"];
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_LT(rows[0]["mean_delta"].get<double>(), 0.0);
  EXPECT_GT(rows[2]["mean_delta"].get<double>(), 0.0);
  EXPECT_TRUE(rows[0].contains("mean_delta_s"));
}

TEST(Cli, ExitCodes) {
  auto config = invoke({"simulate", "--model", "mediated", "-p", "1.5"});
  EXPECT_EQ(config.code, kExitConfig);
  const auto err = nlohmann::json::parse(config.err);
  EXPECT_EQ(err["error"]["category"], "config");

  EXPECT_EQ(invoke({"simulate"}).code, kExitConfig);
  EXPECT_EQ(invoke({"bogus"}).code, kExitConfig);
  EXPECT_EQ(invoke({"triad", "--dataset", "/nonexistent", "--layers", "a,b,c"}).code, kExitData);

  const auto degenerate = invoke({"simulate", "--model", "uncorrelated", "-p", "0", "-R", "3"});
  EXPECT_EQ(degenerate.code, kExitDegenerate);
  EXPECT_EQ(nlohmann::json::parse(degenerate.err)["error"]["category"], "degenerate");

  EXPECT_EQ(invoke({"--help"}).code, kExitOk);
}

TEST(Cli, UnknownLayerIsDataError) {
  TempDir dir;
  write(dir / "toy.edges", toy_dataset());
  const auto r = invoke({"triad", "--dataset", (dir / "toy.edges").string(), "--layers",
                         "1,2,9", "-R", "4"});
  EXPECT_EQ(r.code, kExitData);
  EXPECT_EQ(nlohmann::json::parse(r.err)["error"]["kind"], "UnknownLayer");
}
