#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tmotif/friendship.hpp"
#include "tmotif/synth.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif::cli {

/// Contradictory or missing flags; maps to exit code 1.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string command;
  std::string feature_kind;  // features: ego | simple | pair | stratified

  std::string events;
  std::string friends;
  std::string labels;
  std::string preset;
  std::string config;
  std::string out;
  std::string manifest;
  std::string note_keyword;

  std::optional<Seconds> window;
  bool window_auto = false;
  bool round_hour = false;

  std::uint64_t seed = 7;
  std::size_t threads = 1;
  std::optional<std::size_t> limit;

  std::string order = "both";
  bool stratify = false;

  std::string detect_features = "ego";
  std::size_t repeats = 25;
  double split = 0.75;
  double threshold = 0.5;
  double learning_rate = 0.5;
  std::size_t epochs = 1500;
  double l2 = 1e-3;

  std::string negative_patterns;
};

struct Inputs {
  TemporalGraph graph;
  std::optional<FriendshipSet> friends;
  std::optional<std::vector<std::pair<NodeId, int>>> labels;
  std::optional<SynthConfig> synth;
};

/// Loads --events (+ --friends/--labels) or generates --preset in memory.
Inputs load_inputs(const Options& opt);

/// --window, --window-auto [--round-hour], or the preset window.
Seconds resolve_window(const Options& opt, const Inputs& in);

/// Named output files in write order; `primary` is echoed to stdout when no
/// output directory is given.
struct Outputs {
  std::vector<std::pair<std::string, std::string>> files;
  std::string primary;

  void add(std::string name, std::string content) { files.emplace_back(std::move(name), std::move(content)); }
};

struct RunInfo {
  std::optional<Seconds> window;
  std::vector<std::string> inputs;
};

Outputs run_command(const Options& opt, RunInfo& info, std::ostream& err);

}  // namespace tmotif::cli
