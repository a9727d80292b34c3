#include <algorithm>
#include <fstream>
#include <sstream>

#include "cli_internal.hpp"
#include "json.hpp"
#include "tmotif/census_io.hpp"
#include "tmotif/csv.hpp"
#include "tmotif/error.hpp"
#include "tmotif/feature_matrix.hpp"
#include "tmotif/graph_stats.hpp"
#include "tmotif/io.hpp"
#include "tmotif/motif_counter.hpp"
#include "tmotif/pipeline.hpp"
#include "tmotif/vendor.hpp"

namespace tmotif::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

template <class Fn>
std::string render(Fn&& fn) {
  std::ostringstream s;
  fn(s);
  return s.str();
}

MotifOrder parse_order(const std::string& text) {
  if (text == "2") return MotifOrder::Two;
  if (text == "3") return MotifOrder::Three;
  if (text == "both") return MotifOrder::Both;
  throw UsageError("--order must be 2, 3 or both");
}

const FriendshipSet& require_friends(const Inputs& in) {
  if (!in.friends) throw UsageError("this command needs --friends (or --preset)");
  return *in.friends;
}

const std::vector<std::pair<NodeId, int>>& require_labels(const Inputs& in) {
  if (!in.labels) throw UsageError("this command needs --labels (or --preset)");
  return *in.labels;
}

Json metrics_json(const Metrics& m) {
  return {{"precision", m.precision}, {"recall", m.recall}, {"f1", m.f1}, {"auc_roc", m.auc_roc}};
}

Json holdout_json(const HoldoutResult& r) {
  Json runs = {{"precision", Json::array()}, {"recall", Json::array()}, {"f1", Json::array()},
               {"auc_roc", Json::array()}};
  for (const Metrics& m : r.runs) {
    runs["precision"].push_back(m.precision);
    runs["recall"].push_back(m.recall);
    runs["f1"].push_back(m.f1);
    runs["auc_roc"].push_back(m.auc_roc);
  }
  return {{"train_size", r.train_size}, {"test_size", r.test_size}, {"mean", metrics_json(r.mean)}, {"runs", runs}};
}

HoldoutConfig holdout_config(const Options& opt) {
  if (!(opt.split > 0 && opt.split < 1)) throw UsageError("--split must lie in (0, 1)");
  if (opt.repeats == 0) throw UsageError("--repeats must be >= 1");
  HoldoutConfig h;
  h.train_fraction = opt.split;
  h.repeats = opt.repeats;
  h.seed = opt.seed;
  h.threshold = opt.threshold;
  return h;
}

LogisticConfig logistic_config(const Options& opt) {
  LogisticConfig c;
  c.learning_rate = opt.learning_rate;
  c.epochs = opt.epochs;
  c.l2 = opt.l2;
  c.seed = opt.seed;
  return c;
}

std::vector<std::vector<std::string>> node_ids(const TemporalGraph& g, std::span<const NodeId> nodes) {
  std::vector<std::vector<std::string>> ids;
  ids.reserve(nodes.size());
  for (const NodeId u : nodes) ids.push_back({g.dictionary().external(u)});
  return ids;
}

Outputs cmd_stats(const Options& opt, RunInfo&, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const GraphStats stats = compute_stats(in.graph);
  Json doc;
  doc["event_count"] = stats.event_count;
  doc["node_count"] = in.graph.node_count();
  doc["delta"] = stats.mean_inter_event;
  doc["gamma"] = stats.connectivity_rate;
  if (stats.suggested_window) {
    doc["suggested_window"] = *stats.suggested_window;
    doc["suggested_window_rounded_hour"] = suggest_window(stats, {WindowRounding::NearestHour, 0.0});
  } else {
    doc["suggested_window"] = nullptr;
    doc["suggested_window_rounded_hour"] = nullptr;
  }
  err << "delta=" << format_double(stats.mean_inter_event) << " gamma=" << format_double(stats.connectivity_rate);
  if (stats.suggested_window) err << " suggestion=" << format_double(*stats.suggested_window) << "s";
  err << '\n';
  Outputs o;
  o.add("stats.json", dump(doc));
  o.primary = "stats.json";
  return o;
}

Outputs cmd_count(const Options& opt, RunInfo& info, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const Seconds window = resolve_window(opt, in);
  info.window = window;
  const MotifOrder order = parse_order(opt.order);
  const MotifCensus census = opt.stratify ? count_motifs_stratified(in.graph, window, order, opt.threads)
                                          : count_motifs(in.graph, window, order, opt.threads);
  err << "window=" << window << "s pairs=" << census.total_pairs() << " triples=" << census.total_triples() << '\n';
  Outputs o;
  o.add("census.json", render([&](std::ostream& s) { write_census_json(s, census, window); }));
  o.add("census.csv", render([&](std::ostream& s) { write_census_csv(s, census); }));
  o.primary = "census.json";
  return o;
}

Outputs cmd_features(const Options& opt, RunInfo& info, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const std::string& kind = opt.feature_kind;
  Outputs o;
  o.primary = "features.csv";
  if (kind == "pair") {
    const Seconds window = resolve_window(opt, in);
    info.window = window;
    const FriendshipSet none;
    const auto pairs = candidate_pairs(in.graph, in.friends ? *in.friends : none);
    const FeatureMatrix m = pair_feature_matrix(in.graph, pairs, window, opt.threads);
    std::vector<std::vector<std::string>> ids;
    std::vector<int> labels;
    for (const auto& p : pairs) {
      ids.push_back({in.graph.dictionary().external(p.u), in.graph.dictionary().external(p.v)});
      labels.push_back(p.is_friend ? 1 : 0);
    }
    const std::vector<std::string> headers{"u", "v"};
    std::optional<std::span<const int>> label_col;
    if (in.friends) label_col = std::span<const int>(labels);
    o.add("features.csv", render([&](std::ostream& s) { write_feature_csv(s, m, headers, ids, label_col); }));
    err << pairs.size() << " candidate pairs\n";
    return o;
  }

  FeatureSet set;
  if (kind == "ego") {
    set = FeatureSet::Ego;
  } else if (kind == "simple") {
    set = FeatureSet::Simple;
  } else if (kind == "stratified") {
    set = FeatureSet::Stratified;
  } else {
    throw UsageError("feature kind must be ego, simple, pair or stratified");
  }
  Seconds window = 0;
  if (set != FeatureSet::Simple) {
    window = resolve_window(opt, in);
    info.window = window;
  }
  LabeledNodes rows;
  if (in.labels) {
    rows = labeled_active_nodes(in.graph, *in.labels);
  } else {
    rows.nodes = active_nodes(in.graph);
  }
  const FeatureMatrix m = node_features(in.graph, rows.nodes, set, window, opt.threads);
  const std::vector<std::string> headers{"node"};
  const auto ids = node_ids(in.graph, rows.nodes);
  std::optional<std::span<const int>> label_col;
  if (in.labels) label_col = std::span<const int>(rows.labels);
  o.add("features.csv", render([&](std::ostream& s) { write_feature_csv(s, m, headers, ids, label_col); }));
  err << rows.nodes.size() << " nodes x " << m.cols << " features\n";
  return o;
}

Outputs cmd_detect(const Options& opt, RunInfo& info, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const FeatureSet set = parse_feature_set(opt.detect_features);
  const Seconds window = set == FeatureSet::Simple ? Seconds{0} : resolve_window(opt, in);
  if (set != FeatureSet::Simple) info.window = window;
  const LabeledNodes rows = labeled_active_nodes(in.graph, require_labels(in));
  const DetectionResult r =
      run_detection(in.graph, rows, set, window, holdout_config(opt), logistic_config(opt), opt.threads);

  Json doc;
  doc["command"] = "detect";
  doc["features"] = feature_set_name(set);
  if (set != FeatureSet::Simple) doc["window"] = window;
  doc["rows"] = rows.nodes.size();
  doc["positives"] = std::count(rows.labels.begin(), rows.labels.end(), 1);
  doc["repeats"] = opt.repeats;
  doc["split"] = opt.split;
  doc["threshold"] = opt.threshold;
  doc["seed"] = opt.seed;
  doc["holdout"] = holdout_json(r.holdout);
  doc["mean"] = metrics_json(r.holdout.mean);

  err << "F1=" << format_double(r.holdout.mean.f1) << " precision=" << format_double(r.holdout.mean.precision)
      << " recall=" << format_double(r.holdout.mean.recall) << " auc=" << format_double(r.holdout.mean.auc_roc)
      << '\n';
  Outputs o;
  o.add("metrics.json", dump(doc));
  o.add("model.json", render([&](std::ostream& s) { save_model(s, r.model); }));
  o.add("importance.csv", render([&](std::ostream& s) {
          csv::write_row(s, {"rank", "feature", "weight"});
          for (std::size_t i = 0; i < r.importance.size(); ++i) {
            csv::write_row(s, {std::to_string(i + 1), r.importance[i].name, format_double(r.importance[i].weight)});
          }
        }));
  o.primary = "metrics.json";
  return o;
}

Outputs cmd_friends(const Options& opt, RunInfo& info, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const Seconds window = resolve_window(opt, in);
  info.window = window;
  const FriendshipResult r =
      run_friendship(in.graph, require_friends(in), window, holdout_config(opt), logistic_config(opt), opt.threads);
  Json doc;
  doc["command"] = "friends";
  doc["window"] = window;
  doc["pairs"] = r.pairs.size();
  doc["friend_pairs"] = std::count(r.labels.begin(), r.labels.end(), 1);
  doc["repeats"] = opt.repeats;
  doc["split"] = opt.split;
  doc["seed"] = opt.seed;
  doc["motif"] = holdout_json(r.motif);
  doc["jaccard"] = holdout_json(r.jaccard);
  doc["adamic_adar"] = holdout_json(r.adamic_adar);
  const std::uint64_t stranger_max =
      r.stranger_survival.empty() ? 0 : static_cast<std::uint64_t>(r.stranger_survival.size() - 1);
  doc["max_non_friend_ping_pongs"] = stranger_max;

  err << "F1 motif=" << format_double(r.motif.mean.f1) << " jaccard=" << format_double(r.jaccard.mean.f1)
      << " adamic_adar=" << format_double(r.adamic_adar.mean.f1) << '\n';
  Outputs o;
  o.add("metrics.json", dump(doc));
  o.add("survival.csv", render([&](std::ostream& s) {
          csv::write_row(s, {"k", "friend", "non_friend"});
          const std::size_t n = std::max(r.friend_survival.size(), r.stranger_survival.size());
          for (std::size_t k = 0; k < n; ++k) {
            const double f = k < r.friend_survival.size() ? r.friend_survival[k] : 0.0;
            const double g = k < r.stranger_survival.size() ? r.stranger_survival[k] : 0.0;
            csv::write_row(s, {std::to_string(k), format_double(f), format_double(g)});
          }
        }));
  o.primary = "metrics.json";
  return o;
}

std::vector<MotifClass> parse_negative_patterns(const std::string& text) {
  std::vector<MotifClass> out;
  std::stringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    const auto m = MotifClass::from_name(item);
    if (!m) throw UsageError("unknown motif class '" + item + "'");
    out.push_back(*m);
  }
  return out;
}

Outputs cmd_vendors(const Options& opt, RunInfo& info, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const Seconds window = resolve_window(opt, in);
  info.window = window;
  const TransactionSplit split = split_tf_tn(in.graph, require_friends(in));
  const RatioHeatmap heatmap = tn_tf_ratio_heatmap(split.friends, split.strangers, window, opt.threads);

  PatternSet patterns;
  patterns.positive = default_positive_patterns();
  const NegativeSelection selection = select_negative_patterns(split.friends, split.strangers, window, opt.threads);
  patterns.negative = opt.negative_patterns.empty() ? selection.classes : parse_negative_patterns(opt.negative_patterns);
  try {
    patterns.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const std::size_t k = opt.limit.value_or(1000);
  if (k == 0) throw UsageError("--limit must be >= 1");
  const auto reports = rank_vendors(split.friends, split.strangers, window, patterns, k, opt.threads);

  Json vendors = Json::array();
  for (const auto& r : reports) {
    vendors.push_back({{"rank", r.rank}, {"node", r.external_id}, {"score", r.score}, {"pos_count", r.positive},
                       {"neg_count", r.negative}});
  }
  Json doc;
  doc["command"] = "vendors";
  doc["window"] = window;
  doc["tf_events"] = split.friends.event_count();
  doc["tn_events"] = split.strangers.event_count();
  doc["vendors"] = vendors;

  Json pattern_doc;
  Json positives = Json::array();
  static const char* role_names[] = {"in_burst_receiver", "ping_pong_first_receiver", "repeated_receiver",
                                     "receiver_then_refunder"};
  for (const auto& p : patterns.positive) {
    positives.push_back({{"class", p.motif.name()}, {"role", role_names[static_cast<int>(p.role)]}});
  }
  Json negatives = Json::array();
  for (const MotifClass m : patterns.negative) {
    negatives.push_back({{"class", m.name()},
                         {"tf_triangles", selection.tf_triangles[m.index()]},
                         {"tn_triangles", selection.tn_triangles[m.index()]}});
  }
  pattern_doc["positive"] = positives;
  pattern_doc["negative"] = negatives;
  pattern_doc["negative_source"] = opt.negative_patterns.empty() ? "selected" : "user";

  if (!reports.empty()) err << "top vendor " << reports.front().external_id << " score " << format_double(reports.front().score) << '\n';
  Outputs o;
  o.add("vendors.json", dump(doc));
  o.add("vendors.csv", render([&](std::ostream& s) { write_vendor_csv(s, reports); }));
  o.add("heatmap.csv", render([&](std::ostream& s) { write_heatmap_csv(s, heatmap); }));
  o.add("patterns.json", dump(pattern_doc));
  o.primary = "vendors.json";
  return o;
}

Outputs cmd_cycles(const Options& opt, RunInfo& info, std::ostream& err) {
  const Inputs in = load_inputs(opt);
  const Seconds window = resolve_window(opt, in);
  info.window = window;
  const std::size_t limit = opt.limit.value_or(1000);
  if (limit == 0) throw UsageError("--limit must be >= 1");
  const CycleReport report = mine_cycles(in.graph, window, limit);
  const auto& dict = in.graph.dictionary();

  Json cycles = Json::array();
  for (const auto& inst : report.cycles) {
    Json events = Json::array();
    for (const EventIndex i : inst.event_indices()) {
      const Event& e = in.graph.event(i);
      Json row = {{"sender", dict.external(e.src)}, {"receiver", dict.external(e.dst)}, {"time", e.time}};
      if (e.note) row["note"] = *e.note;
      events.push_back(row);
    }
    cycles.push_back(events);
  }
  Json doc;
  doc["command"] = "cycles";
  doc["window"] = window;
  doc["total_cycles"] = report.total_cycles;
  doc["total_triples"] = report.total_triples;
  doc["share"] = report.share;
  doc["reported"] = report.cycles.size();
  doc["cycles"] = cycles;

  Outputs o;
  if (!opt.note_keyword.empty()) {
    const auto matches = search_notes(in.graph, report.cycles, opt.note_keyword);
    Json notes = Json::array();
    for (const auto& m : matches) {
      notes.push_back({{"sender", m.sender}, {"receiver", m.receiver}, {"time", m.time}, {"note", m.note}});
    }
    doc["note_keyword"] = opt.note_keyword;
    doc["note_matches"] = notes;
    o.add("notes.csv", render([&](std::ostream& s) { write_note_csv(s, matches); }));
    err << matches.size() << " transactions mention '" << opt.note_keyword << "'\n";
  }
  err << report.total_cycles << " cycles among " << report.total_triples << " 3-event motifs\n";
  o.files.insert(o.files.begin(), {"cycles.csv", render([&](std::ostream& s) {
                                     write_cycle_csv(s, in.graph, report.cycles);
                                   })});
  o.files.insert(o.files.begin(), {"cycles.json", dump(doc)});
  o.primary = "cycles.json";
  return o;
}

Outputs cmd_synth(const Options& opt, RunInfo& info, std::ostream& err) {
  if (!opt.preset.empty() && !opt.config.empty()) throw UsageError("--preset and --config are exclusive");
  if (opt.out.empty()) throw UsageError("synth needs --out");
  SynthConfig config;
  if (!opt.preset.empty()) {
    config = preset_config(opt.preset);
  } else if (!opt.config.empty()) {
    std::ifstream file(opt.config);
    if (!file) throw DataError("cannot open " + opt.config);
    config = read_synth_config(file, opt.config);
  } else {
    throw UsageError("synth needs --preset or --config");
  }
  config.seed = opt.seed;
  try {
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw DataError(e.what());
  }
  const SynthData data = generate(config);
  info.window = config.window;
  const auto& dict = data.graph.dictionary();
  Outputs o;
  o.add("events.csv", render([&](std::ostream& s) { write_events(s, data.graph); }));
  o.add("labels.csv", render([&](std::ostream& s) {
          csv::write_row(s, {"node", "label"});
          for (NodeId u = 0; u < data.labels.size(); ++u) {
            csv::write_row(s, {dict.external(u), std::to_string(data.labels[u])});
          }
        }));
  o.add("roles.csv", render([&](std::ostream& s) {
          csv::write_row(s, {"node", "role"});
          for (NodeId u = 0; u < data.roles.size(); ++u) {
            csv::write_row(s, {dict.external(u), synth_role_name(data.roles[u])});
          }
        }));
  o.add("friends.csv", render([&](std::ostream& s) {
          csv::write_row(s, {"u", "v"});
          for (const auto& [u, v] : data.friends.pairs()) csv::write_row(s, {dict.external(u), dict.external(v)});
        }));
  o.add("config.txt", render([&](std::ostream& s) { write_synth_config(s, config); }));
  o.primary = "events.csv";
  err << data.graph.event_count() << " events, " << data.graph.node_count() << " users, " << data.friends.size()
      << " friend pairs\n";
  return o;
}

}  // namespace

Outputs run_command(const Options& opt, RunInfo& info, std::ostream& err) {
  if (opt.threads == 0) throw UsageError("--threads must be >= 1");
  if (opt.window && *opt.window <= 0) throw UsageError("--window must be > 0");
  if (opt.round_hour && !opt.window_auto) throw UsageError("--round-hour requires --window-auto");
  for (const std::string* path : {&opt.events, &opt.friends, &opt.labels, &opt.config}) {
    if (!path->empty()) info.inputs.push_back(*path);
  }
  if (opt.command == "stats") return cmd_stats(opt, info, err);
  if (opt.command == "count") return cmd_count(opt, info, err);
  if (opt.command == "features") return cmd_features(opt, info, err);
  if (opt.command == "detect") return cmd_detect(opt, info, err);
  if (opt.command == "friends") return cmd_friends(opt, info, err);
  if (opt.command == "vendors") return cmd_vendors(opt, info, err);
  if (opt.command == "cycles") return cmd_cycles(opt, info, err);
  if (opt.command == "synth") return cmd_synth(opt, info, err);
  throw UsageError("unknown command '" + opt.command + "'");
}

}  // namespace tmotif::cli
