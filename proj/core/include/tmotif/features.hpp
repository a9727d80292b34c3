#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tmotif/feature_matrix.hpp"
#include "tmotif/friendship.hpp"
#include "tmotif/motif_census.hpp"
#include "tmotif/static_projection.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif {

inline constexpr std::size_t kStratifiedFeatureCount = kCvBucketCount * kMotifClassCount;

using EgoMotifVector = std::array<double, kMotifClassCount>;
using StratifiedEgoVector = std::array<double, kStratifiedFeatureCount>;
using PairMotifVector = std::array<std::uint64_t, kMotifClassCount>;

/// |M_u| / (|M_u| + |M_¬u|), or 0 when the class never occurs.
double motif_ratio(std::uint64_t with_ego, std::uint64_t without_ego);

/// Census of the ego network of u with the ego split filled in, plus CV
/// buckets (and their ego split) when `stratified` is set.
MotifCensus ego_census(const TemporalGraph& g, NodeId u, Seconds window, bool stratified = false);

/// motif_ratio per class over ego_network(g, u).
EgoMotifVector ego_motif_features(const TemporalGraph& g, NodeId u, Seconds window);

/// motif_ratio per (bucket, class), bucket-major: index = bucket * 42 + class.
StratifiedEgoVector stratified_ego_features(const TemporalGraph& g, NodeId u, Seconds window);

struct SimpleGraphVector {
  double degree = 0;           // k_u = |Γ(u)|
  double event_count = 0;      // s_u
  double events_per_edge = 0;  // s_u / k_u
  double out_edge_ratio = 0;   // out-edges / (out-edges + in-edges)
  double out_event_ratio = 0;  // s_out / s_u
  double local_clustering = 0;
  double cycle_probability = 0;

  std::array<double, 7> values() const;
};

/// Names of the seven simple features, in SimpleGraphVector::values() order.
const std::vector<std::string>& simple_feature_names();

/// Simple graph features of u on the full static projection. Self-loop
/// events are ignored. Throws std::invalid_argument when u has no
/// non-self-loop event and std::out_of_range for unknown nodes.
SimpleGraphVector simple_graph_features(const TemporalGraph& g, const StaticProjection& proj, NodeId u);
SimpleGraphVector simple_graph_features(const TemporalGraph& g, NodeId u);

/// Per class, the number of motif instances in g whose node set contains
/// both u and v. Throws std::invalid_argument when u == v.
PairMotifVector pair_motif_features(const TemporalGraph& g, NodeId u, NodeId v, Seconds window);

struct CandidatePair {
  NodeId u = 0;  // u < v
  NodeId v = 0;
  bool is_friend = false;

  bool operator==(const CandidatePair&) const = default;
};

/// Unordered pairs with at least one transaction (either direction) or a
/// friendship, ascending, labeled by friendship.
std::vector<CandidatePair> candidate_pairs(const TemporalGraph& txn, const FriendshipSet& friends);

/// Column names: class names, or "<class>@<bucket>" bucket-major for the
/// stratified layout.
std::vector<std::string> motif_feature_names(bool stratified = false);

/// Batch builders. Rows follow `nodes` / `pairs`; the output does not depend
/// on `threads`.
FeatureMatrix ego_feature_matrix(const TemporalGraph& g, std::span<const NodeId> nodes, Seconds window,
                                 std::size_t threads = 1);
FeatureMatrix stratified_feature_matrix(const TemporalGraph& g, std::span<const NodeId> nodes,
                                        Seconds window, std::size_t threads = 1);
FeatureMatrix simple_feature_matrix(const TemporalGraph& g, std::span<const NodeId> nodes);
FeatureMatrix pair_feature_matrix(const TemporalGraph& g, std::span<const CandidatePair> pairs,
                                  Seconds window, std::size_t threads = 1);

/// Nodes with at least one non-self-loop event, ascending.
std::vector<NodeId> active_nodes(const TemporalGraph& g);

}  // namespace tmotif
