#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "tmotif/friendship.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif {

enum class LabelMode {
  Seller,    // label 1 = the fraudster account itself
  Receiver,  // label 1 = any account that received a fraud payment
};

enum class SynthRole { Normal, Fraudster, Decoy, Vendor };

const char* synth_role_name(SynthRole role);

/// Generator parameters. Every count is a number of users or planted
/// structures; time quantities are integer seconds.
struct SynthConfig {
  std::size_t normal_users = 1000;
  std::size_t fraudsters = 0;
  /// Normal users that make as many sales as a fraudster, spaced more than
  /// one window apart. Drawn from the normal users.
  std::size_t decoy_sellers = 0;
  std::size_t vendors = 0;

  Seconds horizon = 30 * 86400;
  /// Planted clusters keep consecutive gaps within this bound.
  Seconds window = 3600;
  /// Expected background events per user over the horizon.
  double background_per_user = 4.0;
  /// Background payments between non-friends only ever flow one way per pair
  /// (towards the vendor, else towards the larger id).
  bool one_way_strangers = false;

  std::size_t outbursts_per_fraudster = 2;
  std::size_t outburst_size = 4;
  LabelMode label_mode = LabelMode::Seller;

  std::size_t inbursts_per_vendor = 20;
  std::size_t inburst_size = 3;

  std::size_t friend_pairs = 0;
  /// Ping-pong exchanges per friend pair, uniform in [1, 2 * mean - 1].
  std::size_t pingpongs_mean = 3;
  std::size_t friend_triangles = 0;
  std::size_t cycles = 0;
  /// Share of planted cycles whose events carry a "poker" note.
  double poker_fraction = 0.5;

  /// Amounts are exp(N(mu, sigma)) rounded to cents.
  double amount_log_mu = 3.0;
  double amount_log_sigma = 1.0;

  std::uint64_t seed = 1;

  std::size_t user_count() const { return normal_users + fraudsters + vendors; }
  /// Throws std::invalid_argument on infeasible settings.
  void validate() const;
};

/// Named presets: "mercari-outburst", "jpmc-receiver", "venmo".
SynthConfig preset_config(const std::string& name);
const std::vector<std::string>& preset_names();

/// Flat `key=value` lines; `#` starts a comment. Unknown keys and malformed
/// values throw DataError. Missing keys keep the defaults of `base`.
SynthConfig read_synth_config(std::istream& in, const std::string& source_name, SynthConfig base = {});
void write_synth_config(std::ostream& out, const SynthConfig& config);

struct PlantedCycle {
  std::array<NodeId, 3> nodes{};        // A, B, C for A->B->C->A
  std::array<Timestamp, 3> times{};
  bool poker = false;
};

struct SynthData {
  TemporalGraph graph;
  FriendshipSet friends;
  /// Role per NodeId.
  std::vector<SynthRole> roles;
  /// Fraud label per NodeId.
  std::vector<int> labels;
  std::vector<PlantedCycle> cycles;
};

/// Deterministic in the config (including the seed).
SynthData generate(const SynthConfig& config);

/// events.csv, labels.csv, friends.csv, roles.csv and config.txt.
void write_synth(const std::filesystem::path& dir, const SynthData& data, const SynthConfig& config);

}  // namespace tmotif
