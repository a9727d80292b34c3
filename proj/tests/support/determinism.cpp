#include "determinism.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tmotif/cli.hpp"

namespace tmotif::testing {

namespace fs = std::filesystem;

namespace {

std::map<std::string, std::string> read_outputs(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const auto name = entry.path().filename().string();
    if (name == "manifest.json") continue;
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    files[name] = s.str();
  }
  return files;
}

int run_quiet(const std::vector<std::string>& args, std::string& err_text) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  err_text = err.str();
  return code;
}

}  // namespace

std::vector<DeterminismCase> determinism_cases(const fs::path& root) {
  const fs::path data = root / "data";
  std::string err;
  std::vector<std::string> synth{"synth", "--preset", "venmo", "--seed", "5", "--out", data.string()};
  if (run_quiet(synth, err) != cli::kExitOk) throw std::runtime_error("synth failed: " + err);
  const auto events = (data / "events.csv").string();
  const auto friends = (data / "friends.csv").string();
  const std::vector<std::string> in{"--events", events};
  const std::vector<std::string> social{"--events", events, "--friends", friends, "--window", "3600"};
  auto join = [](std::vector<std::string> head, const std::vector<std::string>& tail) {
    head.insert(head.end(), tail.begin(), tail.end());
    return head;
  };
  return {
      {"stats", join({"stats"}, in)},
      {"count", join({"count", "--window", "3600"}, in)},
      {"count-auto-stratified", join({"count", "--window-auto", "--round-hour", "--stratify", "--order", "3"}, in)},
      {"features-ego", join({"features", "ego"}, social)},
      {"features-simple", join({"features", "simple"}, social)},
      {"features-pair", join({"features", "pair"}, social)},
      {"features-stratified", join({"features", "stratified"}, social)},
      {"detect", {"detect", "--preset", "mercari-outburst", "--repeats", "3", "--features", "all"}},
      {"friends", join({"friends", "--repeats", "3"}, social)},
      {"vendors", join({"vendors", "--limit", "20"}, social)},
      {"cycles", join({"cycles", "--window", "3600", "--note-keyword", "poker"}, in)},
      {"synth", {"synth", "--preset", "jpmc-receiver", "--seed", "9"}},
  };
}

DeterminismOutcome check_determinism(const DeterminismCase& c, const fs::path& root) {
  DeterminismOutcome result{c.name, false, ""};
  const fs::path base = root / c.name;
  const fs::path first = base / "t1", again = base / "replay1", wide = base / "replay8";
  fs::remove_all(base);
  std::string err;
  auto args = c.args;
  args.insert(args.end(), {"--out", first.string(), "--threads", "1"});
  if (run_quiet(args, err) != cli::kExitOk) {
    result.detail = "initial run failed: " + err;
    return result;
  }
  const auto manifest = (first / "manifest.json").string();
  for (const auto& [dir, threads] : {std::pair{again, "1"}, std::pair{wide, "8"}}) {
    if (run_quiet({"replay", "--manifest", manifest, "--out", dir.string(), "--threads", threads}, err) !=
        cli::kExitOk) {
      result.detail = std::string("replay at ") + threads + " threads failed: " + err;
      return result;
    }
  }
  const auto reference = read_outputs(first);
  if (reference.empty()) {
    result.detail = "no outputs";
    return result;
  }
  for (const auto& dir : {again, wide}) {
    const auto other = read_outputs(dir);
    if (other.size() != reference.size()) {
      result.detail = "file sets differ in " + dir.filename().string();
      return result;
    }
    for (const auto& [name, content] : reference) {
      const auto it = other.find(name);
      if (it == other.end() || it->second != content) {
        result.detail = name + " differs in " + dir.filename().string();
        return result;
      }
    }
  }
  result.ok = true;
  result.detail = std::to_string(reference.size()) + " files identical";
  return result;
}

}  // namespace tmotif::testing
