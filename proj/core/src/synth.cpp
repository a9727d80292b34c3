#include "tmotif/synth.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "tmotif/csv.hpp"
#include "tmotif/error.hpp"
#include "tmotif/feature_matrix.hpp"
#include "tmotif/io.hpp"
#include "tmotif/random.hpp"

namespace tmotif {

const char* synth_role_name(SynthRole role) {
  switch (role) {
    case SynthRole::Normal: return "normal";
    case SynthRole::Fraudster: return "fraudster";
    case SynthRole::Decoy: return "decoy";
    case SynthRole::Vendor: return "vendor";
  }
  return "normal";
}

void SynthConfig::validate() const {
  const auto fail = [](const std::string& what) { throw std::invalid_argument("synth config: " + what); };
  const std::size_t users = user_count();
  if (users < 2) fail("at least two users are required");
  if (horizon <= 0) fail("horizon must be > 0");
  if (window <= 0) fail("window must be > 0");
  if (window > horizon) fail("window must not exceed the horizon");
  if (decoy_sellers > normal_users) fail("more decoy sellers than normal users");
  if (!std::isfinite(background_per_user) || background_per_user < 0) fail("background_per_user must be >= 0");
  if (!std::isfinite(amount_log_mu) || !std::isfinite(amount_log_sigma) || amount_log_sigma < 0) {
    fail("amount parameters must be finite with sigma >= 0");
  }
  if (!(poker_fraction >= 0 && poker_fraction <= 1)) fail("poker_fraction must lie in [0, 1]");
  if ((fraudsters > 0 || decoy_sellers > 0) && outbursts_per_fraudster > 0) {
    if (outburst_size < 2) fail("outburst_size must be >= 2");
    if (outburst_size > users - fraudsters) fail("outburst_size exceeds the number of possible customers");
    const double decoy_span = 3.0 * static_cast<double>(window) *
                              static_cast<double>(outbursts_per_fraudster * outburst_size);
    if (decoy_sellers > 0 && decoy_span > static_cast<double>(horizon)) {
      fail("decoy sales do not fit in the horizon");
    }
  }
  if (vendors > 0 && inbursts_per_vendor > 0) {
    if (inburst_size < 2) fail("inburst_size must be >= 2");
    if (inburst_size > users - vendors) fail("inburst_size exceeds the number of possible customers");
  }
  const std::size_t social = normal_users;
  if (friend_pairs > 0) {
    if (social < 2) fail("friend pairs need at least two normal users");
    if (friend_pairs > social * (social - 1) / 4) fail("too many friend pairs for the normal users");
    if (pingpongs_mean < 1) fail("pingpongs_mean must be >= 1");
  }
  if ((friend_triangles > 0 || cycles > 0) && social < 3) fail("triangles and cycles need three normal users");
}

SynthConfig preset_config(const std::string& name) {
  SynthConfig c;
  if (name == "mercari-outburst") {
    c.normal_users = 900;
    c.fraudsters = 100;
    c.decoy_sellers = 100;
    c.background_per_user = 4.0;
    c.outbursts_per_fraudster = 2;
    c.outburst_size = 4;
    c.label_mode = LabelMode::Seller;
    c.seed = 7;
  } else if (name == "jpmc-receiver") {
    c.normal_users = 950;
    c.fraudsters = 50;
    c.background_per_user = 4.0;
    c.outbursts_per_fraudster = 3;
    c.outburst_size = 5;
    c.label_mode = LabelMode::Receiver;
    c.seed = 11;
  } else if (name == "venmo") {
    c.normal_users = 495;
    c.vendors = 5;
    c.background_per_user = 2.0;
    c.one_way_strangers = true;
    c.inbursts_per_vendor = 20;
    c.inburst_size = 3;
    c.friend_pairs = 400;
    c.pingpongs_mean = 4;
    c.friend_triangles = 60;
    c.cycles = 20;
    c.poker_fraction = 0.5;
    c.seed = 3;
  } else {
    throw std::invalid_argument("unknown synth preset '" + name + "'");
  }
  return c;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"mercari-outburst", "jpmc-receiver", "venmo"};
  return names;
}

namespace {

struct Field {
  std::function<void(SynthConfig&, const std::string&)> set;
  std::function<std::string(const SynthConfig&)> get;
};

template <class T>
T parse_number(const std::string& text) {
  T value{};
  const char* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end) throw std::invalid_argument("bad number '" + text + "'");
  return value;
}

template <class T>
Field numeric(T SynthConfig::*member) {
  return {[member](SynthConfig& c, const std::string& v) { c.*member = parse_number<T>(v); },
          [member](const SynthConfig& c) {
            if constexpr (std::is_floating_point_v<T>) {
              return format_double(c.*member);
            } else {
              return std::to_string(c.*member);
            }
          }};
}

const std::vector<std::pair<std::string, Field>>& fields() {
  static const std::vector<std::pair<std::string, Field>> table = [] {
    std::vector<std::pair<std::string, Field>> f;
    f.emplace_back("normal_users", numeric(&SynthConfig::normal_users));
    f.emplace_back("fraudsters", numeric(&SynthConfig::fraudsters));
    f.emplace_back("decoy_sellers", numeric(&SynthConfig::decoy_sellers));
    f.emplace_back("vendors", numeric(&SynthConfig::vendors));
    f.emplace_back("horizon", numeric(&SynthConfig::horizon));
    f.emplace_back("window", numeric(&SynthConfig::window));
    f.emplace_back("background_per_user", numeric(&SynthConfig::background_per_user));
    f.emplace_back("one_way_strangers",
                   Field{[](SynthConfig& c, const std::string& v) {
                           if (v == "true" || v == "1") {
                             c.one_way_strangers = true;
                           } else if (v == "false" || v == "0") {
                             c.one_way_strangers = false;
                           } else {
                             throw std::invalid_argument("bad boolean '" + v + "'");
                           }
                         },
                         [](const SynthConfig& c) { return std::string(c.one_way_strangers ? "true" : "false"); }});
    f.emplace_back("outbursts_per_fraudster", numeric(&SynthConfig::outbursts_per_fraudster));
    f.emplace_back("outburst_size", numeric(&SynthConfig::outburst_size));
    f.emplace_back("label_mode",
                   Field{[](SynthConfig& c, const std::string& v) {
                           if (v == "seller") {
                             c.label_mode = LabelMode::Seller;
                           } else if (v == "receiver") {
                             c.label_mode = LabelMode::Receiver;
                           } else {
                             throw std::invalid_argument("label_mode must be seller or receiver");
                           }
                         },
                         [](const SynthConfig& c) {
                           return std::string(c.label_mode == LabelMode::Seller ? "seller" : "receiver");
                         }});
    f.emplace_back("inbursts_per_vendor", numeric(&SynthConfig::inbursts_per_vendor));
    f.emplace_back("inburst_size", numeric(&SynthConfig::inburst_size));
    f.emplace_back("friend_pairs", numeric(&SynthConfig::friend_pairs));
    f.emplace_back("pingpongs_mean", numeric(&SynthConfig::pingpongs_mean));
    f.emplace_back("friend_triangles", numeric(&SynthConfig::friend_triangles));
    f.emplace_back("cycles", numeric(&SynthConfig::cycles));
    f.emplace_back("poker_fraction", numeric(&SynthConfig::poker_fraction));
    f.emplace_back("amount_log_mu", numeric(&SynthConfig::amount_log_mu));
    f.emplace_back("amount_log_sigma", numeric(&SynthConfig::amount_log_sigma));
    f.emplace_back("seed", numeric(&SynthConfig::seed));
    return f;
  }();
  return table;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

}  // namespace

SynthConfig read_synth_config(std::istream& in, const std::string& source_name, SynthConfig base) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(source_name, line_no, "expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    const auto& table = fields();
    const auto it = std::find_if(table.begin(), table.end(), [&](const auto& f) { return f.first == key; });
    if (it == table.end()) throw ParseError(source_name, line_no, "unknown key '" + key + "'");
    try {
      it->second.set(base, value);
    } catch (const std::invalid_argument& e) {
      throw ParseError(source_name, line_no, key + ": " + e.what());
    }
  }
  return base;
}

void write_synth_config(std::ostream& out, const SynthConfig& config) {
  for (const auto& [key, field] : fields()) out << key << '=' << field.get(config) << '\n';
}

namespace {

struct RawEvent {
  NodeId src;
  NodeId dst;
  Timestamp time;
  double amount;
  std::string note;
};

class Generator {
 public:
  explicit Generator(const SynthConfig& c) : c_(c), rng_(c.seed), n_(c.user_count()) {}

  SynthData run() {
    assign_roles();
    plant_friendships();
    background();
    fraud();
    vendors();
    social_events();
    return finish();
  }

 private:
  double amount() {
    const double raw = std::exp(c_.amount_log_mu + c_.amount_log_sigma * rng_.normal());
    return std::max(0.01, std::round(raw * 100.0) / 100.0);
  }

  void emit(NodeId src, NodeId dst, Timestamp t, std::string note) {
    events_.push_back({src, dst, t, amount(), std::move(note)});
  }

  bool friends(NodeId u, NodeId v) const { return friend_set_.count(ordered_pair(u, v)) > 0; }

  // Cluster of `size` timestamps whose whole span stays within one window.
  std::vector<Timestamp> cluster_times(std::size_t size) {
    const Seconds step = std::max<Seconds>(1, c_.window / static_cast<Seconds>(std::max<std::size_t>(size - 1, 1)));
    std::vector<Timestamp> times(size);
    times[0] = rng_.between(0, c_.horizon - c_.window);
    for (std::size_t i = 1; i < size; ++i) times[i] = times[i - 1] + rng_.between(1, step);
    return times;
  }

  // `k` distinct users drawn from `pool`.
  std::vector<NodeId> pick(const std::vector<NodeId>& pool, std::size_t k) {
    std::vector<NodeId> out;
    std::set<NodeId> seen;
    while (out.size() < k) {
      const NodeId u = pool[rng_.below(pool.size())];
      if (seen.insert(u).second) out.push_back(u);
    }
    return out;
  }

  void assign_roles() {
    roles_.assign(n_, SynthRole::Normal);
    std::size_t i = 0;
    for (std::size_t k = 0; k < c_.fraudsters; ++k) roles_[i++] = SynthRole::Fraudster;
    for (std::size_t k = 0; k < c_.vendors; ++k) roles_[i++] = SynthRole::Vendor;
    for (std::size_t k = 0; k < c_.decoy_sellers; ++k) roles_[i++] = SynthRole::Decoy;
    rng_.shuffle(std::span<SynthRole>(roles_));
    labels_.assign(n_, 0);
    for (NodeId u = 0; u < n_; ++u) {
      if (roles_[u] == SynthRole::Normal || roles_[u] == SynthRole::Decoy) social_.push_back(u);
      if (roles_[u] != SynthRole::Fraudster) non_fraud_.push_back(u);
      if (roles_[u] != SynthRole::Vendor) non_vendor_.push_back(u);
      if (roles_[u] == SynthRole::Fraudster && c_.label_mode == LabelMode::Seller) labels_[u] = 1;
    }
  }

  void plant_friendships() {
    while (pairs_.size() < c_.friend_pairs) {
      const auto two = pick(social_, 2);
      const auto p = ordered_pair(two[0], two[1]);
      if (friend_set_.insert(p).second) pairs_.push_back(p);
    }
    for (std::size_t k = 0; k < c_.friend_triangles; ++k) {
      triangles_.push_back(pick(social_, 3));
      const auto& t = triangles_.back();
      friend_set_.insert(ordered_pair(t[0], t[1]));
      friend_set_.insert(ordered_pair(t[1], t[2]));
      friend_set_.insert(ordered_pair(t[0], t[2]));
    }
    for (std::size_t k = 0; k < c_.cycles; ++k) {
      cycle_members_.push_back(pick(social_, 3));
      const auto& t = cycle_members_.back();
      friend_set_.insert(ordered_pair(t[0], t[1]));
      friend_set_.insert(ordered_pair(t[1], t[2]));
      friend_set_.insert(ordered_pair(t[0], t[2]));
    }
  }

  void background() {
    const double expected = c_.background_per_user * static_cast<double>(n_);
    if (expected <= 0) return;
    const double mean_gap = std::max(1.0, static_cast<double>(c_.horizon) / expected);
    const double p = 1.0 / mean_gap;
    for (Timestamp t = rng_.geometric(p); t < c_.horizon; t += 1 + rng_.geometric(p)) {
      NodeId src = static_cast<NodeId>(rng_.below(n_));
      NodeId dst = static_cast<NodeId>(rng_.below(n_ - 1));
      if (dst >= src) ++dst;
      if (c_.one_way_strangers && !friends(src, dst)) {
        const bool src_vendor = roles_[src] == SynthRole::Vendor;
        const bool dst_vendor = roles_[dst] == SynthRole::Vendor;
        if (src_vendor != dst_vendor ? src_vendor : src > dst) std::swap(src, dst);
      }
      emit(src, dst, t, "");
    }
  }

  void fraud() {
    const std::size_t sales = c_.outbursts_per_fraudster * c_.outburst_size;
    for (NodeId u = 0; u < n_; ++u) {
      if (roles_[u] == SynthRole::Fraudster) {
        for (std::size_t b = 0; b < c_.outbursts_per_fraudster; ++b) {
          const auto times = cluster_times(c_.outburst_size);
          const auto customers = pick(non_fraud_, c_.outburst_size);
          for (std::size_t i = 0; i < times.size(); ++i) {
            emit(u, customers[i], times[i], "outburst");
            if (c_.label_mode == LabelMode::Receiver) labels_[customers[i]] = 1;
          }
        }
      } else if (roles_[u] == SynthRole::Decoy && sales > 0) {
        std::vector<NodeId> pool;
        for (const NodeId v : non_fraud_) {
          if (v != u) pool.push_back(v);
        }
        const auto customers = pick(pool, std::min(sales, pool.size()));
        const Seconds budget = 3 * c_.window * static_cast<Seconds>(sales);
        Timestamp t = rng_.between(0, c_.horizon - budget);
        for (std::size_t i = 0; i < sales; ++i) {
          emit(u, customers[i % customers.size()], t, "sale");
          t += rng_.between(c_.window + 1, 3 * c_.window);
        }
      }
    }
  }

  void vendors() {
    for (NodeId v = 0; v < n_; ++v) {
      if (roles_[v] != SynthRole::Vendor) continue;
      for (std::size_t b = 0; b < c_.inbursts_per_vendor; ++b) {
        const auto times = cluster_times(c_.inburst_size);
        const auto customers = pick(non_vendor_, c_.inburst_size);
        for (std::size_t i = 0; i < times.size(); ++i) emit(customers[i], v, times[i], "purchase");
      }
    }
  }

  void social_events() {
    const auto mean = static_cast<std::int64_t>(c_.pingpongs_mean);
    for (const auto& [a, b] : pairs_) {
      const std::int64_t exchanges = rng_.between(1, std::max<std::int64_t>(1, 2 * mean - 1));
      for (std::int64_t k = 0; k < exchanges; ++k) {
        const auto times = cluster_times(2);
        const bool forward = rng_.bernoulli(0.5);
        emit(forward ? a : b, forward ? b : a, times[0], "pingpong");
        emit(forward ? b : a, forward ? a : b, times[1], "pingpong");
      }
    }
    for (const auto& t : triangles_) {
      const auto times = cluster_times(3);
      const std::array<std::pair<NodeId, NodeId>, 3> links{{{t[0], t[1]}, {t[1], t[2]}, {t[0], t[2]}}};
      for (std::size_t i = 0; i < 3; ++i) {
        const bool forward = rng_.bernoulli(0.5);
        const auto [x, y] = links[i];
        emit(forward ? x : y, forward ? y : x, times[i], "triangle");
      }
    }
    for (const auto& m : cycle_members_) {
      PlantedCycle cycle;
      cycle.nodes = {m[0], m[1], m[2]};
      cycle.poker = rng_.bernoulli(c_.poker_fraction);
      const auto times = cluster_times(3);
      for (std::size_t i = 0; i < 3; ++i) {
        cycle.times[i] = times[i];
        std::string note = cycle.poker ? (rng_.bernoulli(0.5) ? "Poker" : "poker") : "cycle";
        emit(m[i], m[(i + 1) % 3], times[i], std::move(note));
      }
      cycles_.push_back(cycle);
    }
  }

  SynthData finish() {
    const int width = static_cast<int>(std::to_string(std::max<std::size_t>(n_, 1) - 1).size());
    TemporalGraph::Builder builder;
    std::vector<std::string> names(n_);
    for (std::size_t u = 0; u < n_; ++u) {
      std::string digits = std::to_string(u);
      names[u] = "u" + std::string(static_cast<std::size_t>(width) - digits.size(), '0') + digits;
      builder.add_node(names[u]);
    }
    for (auto& e : events_) {
      std::optional<std::string> note;
      if (!e.note.empty()) note = std::move(e.note);
      builder.add_event(names[e.src], names[e.dst], e.time, e.amount, std::move(note));
    }
    SynthData data;
    data.graph = std::move(builder).build();
    data.friends = FriendshipSet(std::vector<FriendshipSet::Pair>(friend_set_.begin(), friend_set_.end()));
    data.roles = std::move(roles_);
    data.labels = std::move(labels_);
    data.cycles = std::move(cycles_);
    return data;
  }

  const SynthConfig& c_;
  Rng rng_;
  std::size_t n_;
  std::vector<SynthRole> roles_;
  std::vector<int> labels_;
  std::vector<NodeId> social_, non_fraud_, non_vendor_;
  std::set<FriendshipSet::Pair> friend_set_;
  std::vector<FriendshipSet::Pair> pairs_;
  std::vector<std::vector<NodeId>> triangles_, cycle_members_;
  std::vector<PlantedCycle> cycles_;
  std::vector<RawEvent> events_;
};

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path.string());
  return out;
}

}  // namespace

SynthData generate(const SynthConfig& config) {
  config.validate();
  return Generator(config).run();
}

void write_synth(const std::filesystem::path& dir, const SynthData& data, const SynthConfig& config) {
  std::filesystem::create_directories(dir);
  const auto& dict = data.graph.dictionary();
  {
    auto out = open_out(dir / "events.csv");
    write_events(out, data.graph);
  }
  {
    auto out = open_out(dir / "labels.csv");
    csv::write_row(out, {"node", "label"});
    for (NodeId u = 0; u < data.labels.size(); ++u) {
      csv::write_row(out, {dict.external(u), std::to_string(data.labels[u])});
    }
  }
  {
    auto out = open_out(dir / "roles.csv");
    csv::write_row(out, {"node", "role"});
    for (NodeId u = 0; u < data.roles.size(); ++u) {
      csv::write_row(out, {dict.external(u), synth_role_name(data.roles[u])});
    }
  }
  {
    auto out = open_out(dir / "friends.csv");
    csv::write_row(out, {"u", "v"});
    for (const auto& [u, v] : data.friends.pairs()) csv::write_row(out, {dict.external(u), dict.external(v)});
  }
  {
    auto out = open_out(dir / "config.txt");
    write_synth_config(out, config);
  }
}

}  // namespace tmotif
