#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tmotif/feature_matrix.hpp"
#include "tmotif/features.hpp"
#include "tmotif/logistic.hpp"
#include "tmotif/metrics.hpp"

namespace tmotif {

enum class FeatureSet { Ego, Simple, Stratified, All };

FeatureSet parse_feature_set(const std::string& name);
const char* feature_set_name(FeatureSet set);

/// Rows of a node-level labeled dataset.
struct LabeledNodes {
  std::vector<NodeId> nodes;
  std::vector<int> labels;
};

/// Labeled nodes that have at least one non-self-loop event, ascending.
LabeledNodes labeled_active_nodes(const TemporalGraph& g, std::span<const std::pair<NodeId, int>> labels);

/// Ego ("All" = ego then simple), stratified or simple features for `nodes`.
FeatureMatrix node_features(const TemporalGraph& g, std::span<const NodeId> nodes, FeatureSet set,
                            Seconds window, std::size_t threads = 1);

struct DetectionResult {
  LabeledNodes rows;
  FeatureMatrix features;
  HoldoutResult holdout;
  /// Fit on every row.
  LogisticModel model;
  std::vector<FeatureImportance> importance;
};

/// Node features, repeated-holdout logistic regression and a full-data fit
/// for feature importance.
DetectionResult run_detection(const TemporalGraph& g, const LabeledNodes& rows, FeatureSet set, Seconds window,
                              const HoldoutConfig& holdout, const LogisticConfig& lr, std::size_t threads = 1);

/// Fraction of pairs whose count exceeds k, for k = 0 .. max count.
std::vector<double> survival_curve(std::span<const std::uint64_t> counts);

struct FriendshipResult {
  std::vector<CandidatePair> pairs;
  std::vector<int> labels;
  FeatureMatrix motif_features;
  FeatureMatrix jaccard_feature;
  FeatureMatrix adamic_adar_feature;
  HoldoutResult motif;
  HoldoutResult jaccard;
  HoldoutResult adamic_adar;
  /// pair:ping_pong count per candidate pair.
  std::vector<std::uint64_t> ping_pongs;
  std::vector<double> friend_survival;
  std::vector<double> stranger_survival;
};

/// Candidate pairs labeled by friendship; logistic regression on pair motif
/// counts against the same learner on Jaccard and on Adamic-Adar alone.
FriendshipResult run_friendship(const TemporalGraph& g, const FriendshipSet& friends, Seconds window,
                                const HoldoutConfig& holdout, const LogisticConfig& lr, std::size_t threads = 1);

}  // namespace tmotif
