#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "determinism.hpp"
#include "json.hpp"
#include "tmotif/cli.hpp"

namespace tmotif {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(TMOTIF_FIXTURES) + "/" + name; }

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / ("tmotif_cli_" + name);
  fs::remove_all(dir);
  return dir;
}

TEST(Cli, StatsReportsDeltaGammaAndSuggestion) {
  const auto r = run({"stats", "--events", fixture("stats_three.csv")});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["event_count"], 3);
  EXPECT_DOUBLE_EQ(doc["delta"].get<double>(), 20.0);
  EXPECT_DOUBLE_EQ(doc["gamma"].get<double>(), 0.5);
  EXPECT_DOUBLE_EQ(doc["suggested_window"].get<double>(), 40.0);
  EXPECT_DOUBLE_EQ(doc["suggested_window_rounded_hour"].get<double>(), 3600.0);
}

TEST(Cli, CountFindsTheCycle) {
  const auto r = run({"count", "--events", fixture("cycle.csv"), "--window", "10"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["window"], 10);
  EXPECT_EQ(doc["counts"]["seq:convey+convey"], 1);
  EXPECT_EQ(doc["counts"]["pair:convey"], 2);
  EXPECT_EQ(doc["counts"]["pair:ping_pong"], 0);
  const auto narrow = run({"count", "--events", fixture("cycle.csv"), "--window", "4"});
  EXPECT_EQ(Json::parse(narrow.out)["counts"]["seq:convey+convey"], 0);
}

TEST(Cli, WindowAutoUsesSuggestion) {
  const auto r = run({"count", "--events", fixture("stats_three.csv"), "--window-auto"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["window"], 40);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, cli::kExitUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--events", fixture("cycle.csv"), "--window", "10", "--window-auto"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"count", "--events", fixture("cycle.csv")}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--events", fixture("cycle.csv"), "--window", "0"}).code, cli::kExitUsage);
  EXPECT_EQ(run({"count", "--events", fixture("cycle.csv"), "--window", "5", "--threads", "0"}).code,
            cli::kExitUsage);
  EXPECT_EQ(run({"count", "--events", fixture("missing.csv"), "--window", "10"}).code, cli::kExitData);
  EXPECT_EQ(run({"count", "--events", fixture("bad_time.csv"), "--window", "10"}).code, cli::kExitData);
  EXPECT_EQ(run({"count", "--events", fixture("negative_amount.csv"), "--window", "10"}).code, cli::kExitData);
  EXPECT_EQ(run({"replay", "--manifest", fixture("missing.json"), "--out", "/tmp/x"}).code, cli::kExitData);
  EXPECT_EQ(run({"detect", "--preset", "mercari-outburst", "--events", fixture("cycle.csv"), "--window", "5"}).code,
            cli::kExitUsage);
}

TEST(Cli, HelpListsSubcommandsAndFormats) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, cli::kExitOk);
  for (const char* sub : {"stats", "count", "features", "detect", "friends", "vendors", "cycles", "synth", "replay"}) {
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  }
  const auto sub = run({"count", "--help"});
  EXPECT_EQ(sub.code, cli::kExitOk);
  EXPECT_NE(sub.out.find("--window-auto"), std::string::npos);
  EXPECT_NE(sub.out.find("src,dst,time"), std::string::npos);
}

TEST(Cli, FeatureCsvCarriesLabelsFromFriends) {
  const auto r = run({"features", "pair", "--events", fixture("cycle.csv"), "--friends", fixture("friends.csv"),
                      "--window", "10"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  EXPECT_EQ(header.rfind("u,v,", 0), 0u) << header;
  EXPECT_EQ(header.substr(header.size() - 6), ",label");
}

TEST(Cli, CyclesWithNoteSearch) {
  const auto dir = scratch("cycles");
  const auto r = run({"cycles", "--events", fixture("cycle_notes.csv"), "--window", "100", "--note-keyword", "POKER",
                      "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  for (const char* f : {"cycles.json", "cycles.csv", "notes.csv", "manifest.json"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  std::ifstream notes(dir / "notes.csv");
  std::string line;
  std::size_t rows = 0;
  std::getline(notes, line);
  while (std::getline(notes, line)) {
    ++rows;
    std::string lower = line;
    for (auto& ch : lower) ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    EXPECT_NE(lower.find("poker"), std::string::npos) << line;
  }
  EXPECT_GE(rows, 1u);
  fs::remove_all(dir);
}

TEST(Cli, DetectRegressionValue) {
  const auto r = run({"detect", "--preset", "mercari-outburst", "--seed", "7"});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["repeats"], 25);
  EXPECT_NEAR(doc["mean"]["f1"].get<double>(), 0.9904483168062643, 1e-9);
}

TEST(Cli, ManifestRecordsAbsoluteInputs) {
  const auto dir = scratch("manifest");
  const auto r = run({"count", "--events", fixture("cycle.csv"), "--window", "10", "--out", dir.string()});
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  std::ifstream in(dir / "manifest.json");
  const auto m = Json::parse(in);
  EXPECT_EQ(m["command"], "count");
  EXPECT_EQ(m["window"], 10);
  EXPECT_EQ(m["threads"], 1);
  const auto argv = m["argv"].get<std::vector<std::string>>();
  const auto it = std::find(argv.begin(), argv.end(), "--events");
  ASSERT_NE(it, argv.end());
  EXPECT_TRUE(fs::path(*(it + 1)).is_absolute());
  EXPECT_EQ(m["outputs"], Json::array({"census.json", "census.csv"}));
  fs::remove_all(dir);
}

TEST(Cli, BinaryExitStatus) {
  const std::string bin = TMOTIF_BINARY;
  const auto status = [&](const std::string& tail) {
    const int raw = std::system((bin + " " + tail + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  EXPECT_EQ(status("--version"), 0);
  EXPECT_EQ(status("stats --events " + fixture("stats_three.csv")), 0);
  EXPECT_EQ(status("count --events " + fixture("cycle.csv")), 1);
  EXPECT_EQ(status("stats --events " + fixture("missing.csv")), 2);
}

TEST(CliDeterminism, EverySubcommandReplaysIdentically) {
  const auto root = scratch("determinism");
  for (const auto& c : testing::determinism_cases(root)) {
    const auto outcome = testing::check_determinism(c, root);
    EXPECT_TRUE(outcome.ok) << c.name << ": " << outcome.detail;
  }
  fs::remove_all(root);
}

}  // namespace
}  // namespace tmotif
