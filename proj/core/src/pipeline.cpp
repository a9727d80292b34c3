#include "tmotif/pipeline.hpp"

#include <algorithm>
#include <stdexcept>

#include "tmotif/link_heuristics.hpp"
#include "tmotif/static_projection.hpp"

namespace tmotif {

FeatureSet parse_feature_set(const std::string& name) {
  if (name == "ego") return FeatureSet::Ego;
  if (name == "simple") return FeatureSet::Simple;
  if (name == "stratified") return FeatureSet::Stratified;
  if (name == "all") return FeatureSet::All;
  throw std::invalid_argument("unknown feature set '" + name + "'");
}

const char* feature_set_name(FeatureSet set) {
  switch (set) {
    case FeatureSet::Ego: return "ego";
    case FeatureSet::Simple: return "simple";
    case FeatureSet::Stratified: return "stratified";
    case FeatureSet::All: return "all";
  }
  return "ego";
}

LabeledNodes labeled_active_nodes(const TemporalGraph& g, std::span<const std::pair<NodeId, int>> labels) {
  const auto active = active_nodes(g);
  std::vector<std::pair<NodeId, int>> sorted(labels.begin(), labels.end());
  std::sort(sorted.begin(), sorted.end());
  LabeledNodes rows;
  for (const auto& [node, label] : sorted) {
    if (std::binary_search(active.begin(), active.end(), node)) {
      rows.nodes.push_back(node);
      rows.labels.push_back(label);
    }
  }
  return rows;
}

FeatureMatrix node_features(const TemporalGraph& g, std::span<const NodeId> nodes, FeatureSet set,
                            Seconds window, std::size_t threads) {
  switch (set) {
    case FeatureSet::Ego: return ego_feature_matrix(g, nodes, window, threads);
    case FeatureSet::Simple: return simple_feature_matrix(g, nodes);
    case FeatureSet::Stratified: return stratified_feature_matrix(g, nodes, window, threads);
    case FeatureSet::All:
      return ego_feature_matrix(g, nodes, window, threads).hconcat(simple_feature_matrix(g, nodes));
  }
  throw std::invalid_argument("unknown feature set");
}

DetectionResult run_detection(const TemporalGraph& g, const LabeledNodes& rows, FeatureSet set, Seconds window,
                              const HoldoutConfig& holdout, const LogisticConfig& lr, std::size_t threads) {
  DetectionResult result;
  result.rows = rows;
  result.features = node_features(g, rows.nodes, set, window, threads);
  result.holdout = repeated_holdout(result.features, rows.labels, holdout, logistic_trainer(lr));
  result.model = train_logistic(result.features, rows.labels, lr);
  result.importance = feature_importance(result.model, result.features.column_names);
  return result;
}

std::vector<double> survival_curve(std::span<const std::uint64_t> counts) {
  if (counts.empty()) return {};
  const std::uint64_t top = *std::max_element(counts.begin(), counts.end());
  std::vector<double> curve(top + 1, 0.0);
  for (std::uint64_t k = 0; k <= top; ++k) {
    const auto above = std::count_if(counts.begin(), counts.end(), [k](std::uint64_t c) { return c > k; });
    curve[k] = static_cast<double>(above) / static_cast<double>(counts.size());
  }
  return curve;
}

FriendshipResult run_friendship(const TemporalGraph& g, const FriendshipSet& friends, Seconds window,
                                const HoldoutConfig& holdout, const LogisticConfig& lr, std::size_t threads) {
  FriendshipResult r;
  r.pairs = candidate_pairs(g, friends);
  const std::size_t n = r.pairs.size();
  r.labels.reserve(n);
  for (const auto& p : r.pairs) r.labels.push_back(p.is_friend ? 1 : 0);

  r.motif_features = pair_feature_matrix(g, r.pairs, window, threads);
  const StaticProjection proj(g);
  r.jaccard_feature = FeatureMatrix(n, {"jaccard"});
  r.adamic_adar_feature = FeatureMatrix(n, {"adamic_adar"});
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = r.pairs[i];
    const bool known = proj.has_node(p.u) && proj.has_node(p.v);
    r.jaccard_feature.at(i, 0) = known ? jaccard(proj, p.u, p.v) : 0.0;
    r.adamic_adar_feature.at(i, 0) = known ? adamic_adar(proj, p.u, p.v) : 0.0;
  }

  const Trainer trainer = logistic_trainer(lr);
  r.motif = repeated_holdout(r.motif_features, r.labels, holdout, trainer);
  r.jaccard = repeated_holdout(r.jaccard_feature, r.labels, holdout, trainer);
  r.adamic_adar = repeated_holdout(r.adamic_adar_feature, r.labels, holdout, trainer);

  const std::size_t pp = MotifClass::pair(PairType::PingPong).index();
  std::vector<std::uint64_t> friend_counts, stranger_counts;
  r.ping_pongs.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto c = static_cast<std::uint64_t>(r.motif_features.at(i, pp));
    r.ping_pongs.push_back(c);
    (r.labels[i] ? friend_counts : stranger_counts).push_back(c);
  }
  r.friend_survival = survival_curve(friend_counts);
  r.stranger_survival = survival_curve(stranger_counts);
  return r;
}

}  // namespace tmotif
