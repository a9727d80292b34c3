#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

#include "cli_internal.hpp"
#include "tmotif/error.hpp"
#include "tmotif/graph_stats.hpp"
#include "tmotif/io.hpp"

namespace tmotif::cli {

Inputs load_inputs(const Options& opt) {
  Inputs in;
  if (!opt.preset.empty()) {
    if (!opt.events.empty() || !opt.friends.empty() || !opt.labels.empty()) {
      throw UsageError("--preset cannot be combined with --events, --friends or --labels");
    }
    SynthConfig config = preset_config(opt.preset);
    config.seed = opt.seed;
    SynthData data = generate(config);
    in.graph = std::move(data.graph);
    in.friends = std::move(data.friends);
    std::vector<std::pair<NodeId, int>> labels;
    for (NodeId u = 0; u < data.labels.size(); ++u) labels.emplace_back(u, data.labels[u]);
    in.labels = std::move(labels);
    in.synth = config;
    return in;
  }
  if (opt.events.empty()) throw UsageError("one of --events or --preset is required");

  std::vector<ExternalPair> friend_pairs;
  std::vector<std::pair<std::string, int>> labels;
  std::vector<std::string> extra;
  if (!opt.friends.empty()) {
    friend_pairs = load_friend_pairs(opt.friends);
    for (const auto& [u, v] : friend_pairs) {
      extra.push_back(u);
      extra.push_back(v);
    }
  }
  if (!opt.labels.empty()) {
    labels = load_labels(opt.labels);
    for (const auto& entry : labels) extra.push_back(entry.first);
  }
  in.graph = load_events(opt.events, {}, extra);
  const auto& dict = in.graph.dictionary();
  if (!opt.friends.empty()) in.friends = FriendshipSet::from_external(friend_pairs, dict);
  if (!opt.labels.empty()) {
    std::vector<std::pair<NodeId, int>> resolved;
    resolved.reserve(labels.size());
    for (const auto& [name, label] : labels) resolved.emplace_back(dict.at(name), label);
    std::sort(resolved.begin(), resolved.end());
    in.labels = std::move(resolved);
  }
  return in;
}

Seconds resolve_window(const Options& opt, const Inputs& in) {
  if (opt.window) return *opt.window;
  if (opt.window_auto) {
    const GraphStats stats = compute_stats(in.graph);
    if (!stats.suggested_window) throw DataError("connectivity rate is 0; pass --window explicitly");
    WindowPolicy policy;
    policy.rounding = opt.round_hour ? WindowRounding::NearestHour : WindowRounding::None;
    const double w = suggest_window(stats, policy);
    return std::max<Seconds>(1, static_cast<Seconds>(std::llround(w)));
  }
  if (in.synth) return in.synth->window;
  throw UsageError("one of --window or --window-auto is required");
}

}  // namespace tmotif::cli
