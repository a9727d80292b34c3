#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tmotif/random.hpp"
#include "tmotif/temporal_graph.hpp"

namespace tmotif::testing {

struct RandomGraphSpec {
  std::size_t min_nodes = 2;
  std::size_t max_nodes = 10;
  std::size_t max_events = 30;
  Timestamp max_time = 40;
  double self_loop_rate = 0.05;
  bool amounts = false;
};

/// Random multigraph with small integer times (many ties) and optional
/// amounts drawn from a few magnitudes so every CV bucket occurs.
TemporalGraph random_graph(Rng& rng, const RandomGraphSpec& shape = {});

/// Graph from (src, dst, time) triples with single-letter or arbitrary ids.
TemporalGraph graph_of(const std::vector<std::tuple<std::string, std::string, Timestamp>>& events);
TemporalGraph graph_with_amounts(
    const std::vector<std::tuple<std::string, std::string, Timestamp, double>>& events);

NodeId id(const TemporalGraph& g, const std::string& external);

/// One motif found by exhaustive search.
struct BruteInstance {
  std::vector<EventIndex> events;
  std::size_t motif = 0;          // canonical class index
  std::vector<NodeId> nodes;      // ascending, distinct
};

/// Every 2- and 3-event motif by exhaustive scan over ordered index tuples,
/// with its own endpoint table for the six pair types.
std::vector<BruteInstance> brute_instances(const TemporalGraph& g, Seconds window);

/// Events of the ego network of u by quadratic scan over the raw events.
std::vector<EventIndex> brute_ego_events(const TemporalGraph& g, NodeId u);

/// The seven simple features from a dense adjacency matrix.
std::array<double, 7> brute_simple_features(const TemporalGraph& g, NodeId u);

/// Two-pass population standard deviation over mean.
double reference_cv(const std::vector<double>& xs);

}  // namespace tmotif::testing
