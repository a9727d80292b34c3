#include "tmotif/cli.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <set>

#include "CLI11.hpp"
#include "cli_internal.hpp"
#include "json.hpp"
#include "tmotif/error.hpp"

namespace tmotif::cli {
namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

constexpr const char* kFormats = R"(
File formats:
  events   CSV with header src,dst,time[,amount][,note]; time is integer
           seconds, amount a non-negative number, note free text.
  friends  CSV with header u,v; undirected, one pair per row.
  labels   CSV with header node,label; label is 0 or 1.
Outputs are JSON/CSV. With --out DIR they are written as files next to a
manifest.json; otherwise the main JSON document goes to standard output.
Seeds default to 7; --threads never changes output bytes.)";

const std::set<std::string> kPathFlags = {"--events", "--friends", "--labels", "--config"};

// Storage shared by the subcommands; only one of them is parsed.
struct Flags {
  Seconds window_value = 0;
  std::size_t limit_value = 0;
};

void add_inputs(CLI::App* sub, Options& o, Flags& f, bool windowed) {
  sub->add_option("--events", o.events, "Event CSV");
  sub->add_option("--friends", o.friends, "Friendship CSV");
  sub->add_option("--labels", o.labels, "Label CSV");
  sub->add_option("--preset", o.preset, "Generate the input in memory from a synth preset")
      ->check(CLI::IsMember(preset_names()));
  sub->add_option("--seed", o.seed, "Seed for every random choice")->capture_default_str();
  sub->add_option("--threads", o.threads, "Worker threads")->capture_default_str();
  sub->add_option("--out", o.out, "Output directory");
  if (windowed) {
    auto* window = sub->add_option("--window", f.window_value, "Inter-event threshold in seconds");
    auto* automatic = sub->add_flag("--window-auto", o.window_auto, "Use the delta/gamma suggestion");
    sub->add_flag("--round-hour", o.round_hour, "Round the suggestion to the nearest hour");
    window->excludes(automatic);
  }
  sub->footer(kFormats);
}

void add_holdout(CLI::App* sub, Options& o) {
  sub->add_option("--repeats", o.repeats, "Repeated hold-out rounds")->capture_default_str();
  sub->add_option("--split", o.split, "Training fraction")->capture_default_str();
  sub->add_option("--threshold", o.threshold, "Classification threshold")->capture_default_str();
  sub->add_option("--learning-rate", o.learning_rate, "Gradient step")->capture_default_str();
  sub->add_option("--epochs", o.epochs, "Gradient-descent epochs")->capture_default_str();
  sub->add_option("--l2", o.l2, "L2 penalty")->capture_default_str();
}

std::vector<std::string> recorded_args(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    const auto eq = a.find('=');
    const std::string flag = a.substr(0, eq);
    if (kPathFlags.count(flag) && eq != std::string::npos) {
      out.push_back(flag + "=" + fs::absolute(a.substr(eq + 1)).lexically_normal().string());
    } else if (kPathFlags.count(a) && i + 1 < args.size()) {
      out.push_back(a);
      out.push_back(fs::absolute(args[++i]).lexically_normal().string());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw DataError("cannot write " + path.string());
  file << content;
  if (!file) throw DataError("cannot write " + path.string());
}

int execute(const Options& opt, const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  RunInfo info;
  const Outputs outputs = run_command(opt, info, err);
  if (opt.out.empty()) {
    for (const auto& [name, content] : outputs.files) {
      if (name == outputs.primary) out << content;
    }
    return kExitOk;
  }
  const fs::path dir(opt.out);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create " + dir.string() + ": " + ec.message());
  Json manifest;
  manifest["tool"] = "tmotif";
  manifest["version"] = TMOTIF_VERSION;
  manifest["command"] = opt.command;
  manifest["argv"] = recorded_args(args);
  Json inputs = Json::array();
  for (const auto& p : info.inputs) inputs.push_back(fs::absolute(p).lexically_normal().string());
  manifest["inputs"] = inputs;
  if (!opt.preset.empty()) manifest["preset"] = opt.preset;
  manifest["window"] = info.window ? Json(*info.window) : Json(nullptr);
  manifest["seed"] = opt.seed;
  manifest["threads"] = opt.threads;
  Json names = Json::array();
  for (const auto& [name, content] : outputs.files) {
    write_file(dir / name, content);
    names.push_back(name);
  }
  manifest["outputs"] = names;
  manifest["wall_time_seconds"] =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  write_file(dir / "manifest.json", manifest.dump(2) + "\n");
  err << "wrote " << outputs.files.size() << " files to " << dir.string() << '\n';
  return kExitOk;
}

int replay(const std::string& manifest_path, const std::string& out_dir, std::optional<std::size_t> threads,
           std::ostream& out, std::ostream& err) {
  std::ifstream file(manifest_path);
  if (!file) throw DataError("cannot open " + manifest_path);
  Json manifest;
  try {
    manifest = Json::parse(file);
  } catch (const Json::exception& e) {
    throw DataError(manifest_path + ": " + e.what());
  }
  if (!manifest.contains("argv") || !manifest["argv"].is_array()) throw DataError(manifest_path + ": no argv");
  std::vector<std::string> args;
  const auto recorded = manifest["argv"].get<std::vector<std::string>>();
  for (std::size_t i = 0; i < recorded.size(); ++i) {
    const std::string& a = recorded[i];
    if (a == "--out" || a == "--threads") {
      ++i;
      continue;
    }
    if (a.rfind("--out=", 0) == 0 || a.rfind("--threads=", 0) == 0) continue;
    args.push_back(a);
  }
  if (args.empty() || args.front() == "replay") throw DataError(manifest_path + ": not a replayable run");
  args.push_back("--out");
  args.push_back(out_dir);
  args.push_back("--threads");
  args.push_back(std::to_string(threads.value_or(manifest.value("threads", std::size_t{1}))));
  return run(args, out, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Temporal motif analytics for transaction networks", "tmotif"};
  app.require_subcommand(1);
  app.set_version_flag("--version", TMOTIF_VERSION);
  Options o;
  Flags f;

  auto* stats = app.add_subcommand("stats", "Mean inter-event time, connectivity rate and window suggestion");
  add_inputs(stats, o, f, false);

  auto* count = app.add_subcommand("count", "Motif census (42 classes)");
  add_inputs(count, o, f, true);
  count->add_option("--order", o.order, "2, 3 or both")->capture_default_str();
  count->add_flag("--stratify", o.stratify, "Split counts by amount CV bucket (needs amounts)");

  auto* features = app.add_subcommand("features", "Export a feature matrix: ego, simple, pair or stratified");
  add_inputs(features, o, f, true);
  features->add_option("kind", o.feature_kind, "ego | simple | pair | stratified")
      ->required()
      ->check(CLI::IsMember({"ego", "simple", "pair", "stratified"}));

  auto* detect = app.add_subcommand("detect", "Fraud detection: node features, repeated hold-out logistic regression");
  add_inputs(detect, o, f, true);
  detect->add_option("--features", o.detect_features, "ego | simple | all | stratified")
      ->capture_default_str()
      ->check(CLI::IsMember({"ego", "simple", "all", "stratified"}));
  add_holdout(detect, o);

  auto* friends = app.add_subcommand("friends", "Friendship prediction: pair motifs vs. Jaccard and Adamic-Adar");
  add_inputs(friends, o, f, true);
  add_holdout(friends, o);

  auto* vendors = app.add_subcommand("vendors", "TF/TN heatmap and vendor ranking");
  add_inputs(vendors, o, f, true);
  vendors->add_option("--limit", f.limit_value, "Number of ranked users (default 1000)");
  vendors->add_option("--negative-patterns", o.negative_patterns,
                      "Comma-separated fixed negative classes instead of the data-selected ones");

  auto* cycles = app.add_subcommand("cycles", "Mine 3-node temporal cycles");
  add_inputs(cycles, o, f, true);
  cycles->add_option("--limit", f.limit_value, "Reported cycles (default 1000)");
  cycles->add_option("--note-keyword", o.note_keyword, "Case-insensitive note search over mined cycles");

  auto* synth = app.add_subcommand("synth", "Generate a synthetic transaction network");
  synth->add_option("--preset", o.preset, "Preset name")->check(CLI::IsMember(preset_names()));
  synth->add_option("--config", o.config, "key=value configuration file");
  synth->add_option("--seed", o.seed, "Generator seed")->capture_default_str();
  synth->add_option("--threads", o.threads, "Accepted for uniformity; generation is sequential");
  synth->add_option("--out", o.out, "Output directory")->required();
  synth->footer(
      "\nWrites events.csv, labels.csv, friends.csv, roles.csv and config.txt.\n"
      "config.txt uses one key=value per line and can be passed back with --config.");

  auto* replay_cmd = app.add_subcommand("replay", "Re-run a recorded manifest");
  std::string manifest_path, replay_out;
  std::size_t replay_threads = 1;
  replay_cmd->add_option("--manifest", manifest_path, "manifest.json of an earlier run")->required();
  replay_cmd->add_option("--out", replay_out, "Output directory")->required();
  auto* replay_threads_opt = replay_cmd->add_option("--threads", replay_threads, "Override the recorded threads");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (replay_cmd->parsed()) {
      std::optional<std::size_t> threads;
      if (replay_threads_opt->count() > 0) threads = replay_threads;
      return replay(manifest_path, replay_out, threads, out, err);
    }
    const CLI::App* sub = app.get_subcommands().front();
    o.command = sub->get_name();
    if (const auto* w = sub->get_option_no_throw("--window"); w && w->count() > 0) o.window = f.window_value;
    if (const auto* l = sub->get_option_no_throw("--limit"); l && l->count() > 0) o.limit = f.limit_value;
    return execute(o, args, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitData;
  }
}

}  // namespace tmotif::cli
