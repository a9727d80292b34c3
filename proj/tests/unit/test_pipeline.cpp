#include <gtest/gtest.h>

#include "oracles.hpp"
#include "tmotif/pipeline.hpp"
#include "tmotif/synth.hpp"

namespace tmotif {
namespace {

using testing::graph_with_amounts;
using testing::id;

TEST(FeatureSetNames, RoundTrip) {
  for (auto s : {FeatureSet::Ego, FeatureSet::Simple, FeatureSet::Stratified, FeatureSet::All}) {
    EXPECT_EQ(parse_feature_set(feature_set_name(s)), s);
  }
  EXPECT_THROW(parse_feature_set("fancy"), std::invalid_argument);
}

TEST(LabeledActiveNodes, DropsIsolatedAndSorts) {
  TemporalGraph::Builder b;
  b.add_node("idle");
  b.add_event("a", "b", 0);
  b.add_event("c", "c", 1);
  const auto g = std::move(b).build();
  const std::vector<std::pair<NodeId, int>> labels{{id(g, "b"), 1}, {id(g, "idle"), 1}, {id(g, "a"), 0}};
  const auto rows = labeled_active_nodes(g, labels);
  ASSERT_EQ(rows.nodes.size(), 2u);
  EXPECT_EQ(rows.nodes[0], std::min(id(g, "a"), id(g, "b")));
  EXPECT_EQ(rows.labels.size(), 2u);
}

TEST(NodeFeatures, ColumnCounts) {
  const auto g = graph_with_amounts({{"a", "b", 0, 1}, {"b", "a", 1, 9}, {"a", "c", 2, 5}});
  const std::vector<NodeId> nodes{id(g, "a"), id(g, "b")};
  EXPECT_EQ(node_features(g, nodes, FeatureSet::Ego, 10).cols, kMotifClassCount);
  EXPECT_EQ(node_features(g, nodes, FeatureSet::Simple, 10).cols, 7u);
  EXPECT_EQ(node_features(g, nodes, FeatureSet::Stratified, 10).cols, kMotifClassCount * kCvBucketCount);
  const auto all = node_features(g, nodes, FeatureSet::All, 10, 3);
  EXPECT_EQ(all.cols, kMotifClassCount + 7);
  EXPECT_EQ(all.rows, 2u);
  const auto ego = node_features(g, nodes, FeatureSet::Ego, 10);
  for (std::size_t r = 0; r < 2; ++r) {
    for (std::size_t c = 0; c < ego.cols; ++c) EXPECT_EQ(all.at(r, c), ego.at(r, c));
  }
}

TEST(SurvivalCurve, Fractions) {
  const std::vector<std::uint64_t> counts{0, 1, 1, 3};
  const auto s = survival_curve(counts);
  ASSERT_EQ(s.size(), 4u);
  EXPECT_DOUBLE_EQ(s[0], 0.75);
  EXPECT_DOUBLE_EQ(s[1], 0.25);
  EXPECT_DOUBLE_EQ(s[2], 0.25);
  EXPECT_DOUBLE_EQ(s[3], 0.0);
  EXPECT_TRUE(survival_curve({}).empty());
}

TEST(Detection, SmallOutburstWorld) {
  SynthConfig c;
  c.normal_users = 180;
  c.fraudsters = 20;
  c.decoy_sellers = 20;
  c.horizon = 10 * 86400;
  c.outbursts_per_fraudster = 3;
  c.seed = 21;
  const auto data = generate(c);
  std::vector<std::pair<NodeId, int>> labels;
  for (NodeId u : data.graph.nodes()) labels.emplace_back(u, data.labels[u]);
  const auto rows = labeled_active_nodes(data.graph, labels);
  HoldoutConfig h;
  h.repeats = 5;
  const auto a = run_detection(data.graph, rows, FeatureSet::Ego, c.window, h, {}, 1);
  const auto b = run_detection(data.graph, rows, FeatureSet::Ego, c.window, h, {}, 4);
  EXPECT_EQ(a.holdout.mean.f1, b.holdout.mean.f1);
  EXPECT_EQ(a.model.weights, b.model.weights);
  EXPECT_EQ(a.importance.size(), kMotifClassCount);
  EXPECT_GT(a.holdout.mean.f1, 0.8);
}

TEST(Friendship, SmallSocialWorld) {
  auto c = preset_config("venmo");
  c.normal_users = 150;
  c.vendors = 2;
  c.friend_pairs = 120;
  c.friend_triangles = 10;
  c.cycles = 3;
  const auto data = generate(c);
  HoldoutConfig h;
  h.repeats = 3;
  const auto r = run_friendship(data.graph, data.friends, c.window, h, {}, 2);
  EXPECT_EQ(r.pairs.size(), r.labels.size());
  EXPECT_EQ(r.ping_pongs.size(), r.pairs.size());
  EXPECT_EQ(r.motif_features.rows, r.pairs.size());
  EXPECT_EQ(r.jaccard_feature.cols, 1u);
  EXPECT_EQ(r.adamic_adar_feature.cols, 1u);
  EXPECT_EQ(r.stranger_survival.size(), 1u);
  EXPECT_GT(r.motif.mean.f1, r.jaccard.mean.f1);
}

}  // namespace
}  // namespace tmotif
