#include "tmotif/features.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include "tmotif/motif_counter.hpp"
#include "tmotif/parallel.hpp"

namespace tmotif {

double motif_ratio(std::uint64_t with_ego, std::uint64_t without_ego) {
  const std::uint64_t total = with_ego + without_ego;
  if (total == 0) return 0.0;
  return static_cast<double>(with_ego) / static_cast<double>(total);
}

MotifCensus ego_census(const TemporalGraph& g, NodeId u, Seconds window, bool stratified) {
  const TemporalGraph ego = ego_network(g, u);
  if (stratified && !ego.all_amounts_present()) {
    throw std::invalid_argument("stratified features need an amount on every event");
  }
  MotifCensus census;
  census.has_ego_split = true;
  census.has_buckets = stratified;
  visit_instances(ego, window, MotifOrder::Both, [&](const MotifInstance& inst) {
    const std::size_t c = inst.motif.index();
    census.add(inst);
    const bool mine = inst.contains(u);
    ++(mine ? census.with_ego : census.without_ego)[c];
    if (stratified) {
      const auto b = static_cast<std::size_t>(instance_bucket(ego, inst));
      ++census.buckets[c][b];
      if (mine) ++census.buckets_with_ego[c][b];
    }
  });
  return census;
}

EgoMotifVector ego_motif_features(const TemporalGraph& g, NodeId u, Seconds window) {
  const MotifCensus census = ego_census(g, u, window);
  EgoMotifVector x{};
  for (std::size_t c = 0; c < kMotifClassCount; ++c) x[c] = motif_ratio(census.with_ego[c], census.without_ego[c]);
  return x;
}

StratifiedEgoVector stratified_ego_features(const TemporalGraph& g, NodeId u, Seconds window) {
  const MotifCensus census = ego_census(g, u, window, true);
  StratifiedEgoVector x{};
  for (std::size_t b = 0; b < kCvBucketCount; ++b) {
    for (std::size_t c = 0; c < kMotifClassCount; ++c) {
      const std::uint64_t with = census.buckets_with_ego[c][b];
      x[b * kMotifClassCount + c] = motif_ratio(with, census.buckets[c][b] - with);
    }
  }
  return x;
}

std::array<double, 7> SimpleGraphVector::values() const {
  return {degree, event_count, events_per_edge, out_edge_ratio, out_event_ratio, local_clustering,
          cycle_probability};
}

const std::vector<std::string>& simple_feature_names() {
  static const std::vector<std::string> names = {"degree",          "event_count",
                                                 "events_per_edge", "out_edge_ratio",
                                                 "out_event_ratio", "local_clustering",
                                                 "cycle_probability"};
  return names;
}

SimpleGraphVector simple_graph_features(const TemporalGraph& g, const StaticProjection& proj, NodeId u) {
  g.require_node(u);
  std::size_t events = 0;
  std::size_t out_events = 0;
  for (const EventIndex i : g.incident(u)) {
    const Event& e = g.event(i);
    if (e.is_self_loop()) continue;
    ++events;
    if (e.src == u) ++out_events;
  }
  if (events == 0) throw std::invalid_argument("simple_graph_features: node has no events");

  const auto nbrs = proj.neighbors(u);
  const auto outs = proj.out_neighbors(u);
  const auto ins = proj.in_neighbors(u);
  const auto linked = [&](NodeId a, NodeId b) { return proj.has_edge(a, b) || proj.has_edge(b, a); };

  SimpleGraphVector f;
  const double k = static_cast<double>(nbrs.size());
  f.degree = k;
  f.event_count = static_cast<double>(events);
  f.events_per_edge = f.event_count / k;
  f.out_edge_ratio = static_cast<double>(outs.size()) / static_cast<double>(outs.size() + ins.size());
  f.out_event_ratio = static_cast<double>(out_events) / f.event_count;

  std::size_t directed_links = 0;
  for (const NodeId x : nbrs) {
    for (const NodeId y : proj.out_neighbors(x)) {
      if (y != u && std::binary_search(nbrs.begin(), nbrs.end(), y)) ++directed_links;
    }
  }
  f.local_clustering = nbrs.size() < 2 ? 0.0 : static_cast<double>(directed_links) / (k * (k - 1.0));

  std::size_t triangles = 0;
  std::size_t cycles = 0;
  for (std::size_t a = 0; a < nbrs.size(); ++a) {
    for (std::size_t b = a + 1; b < nbrs.size(); ++b) {
      const NodeId x = nbrs[a];
      const NodeId y = nbrs[b];
      if (!linked(x, y)) continue;
      ++triangles;
      const bool forward = proj.has_edge(u, x) && proj.has_edge(x, y) && proj.has_edge(y, u);
      const bool backward = proj.has_edge(u, y) && proj.has_edge(y, x) && proj.has_edge(x, u);
      if (forward || backward) ++cycles;
    }
  }
  f.cycle_probability = triangles == 0 ? 0.0 : static_cast<double>(cycles) / static_cast<double>(triangles);
  return f;
}

SimpleGraphVector simple_graph_features(const TemporalGraph& g, NodeId u) {
  return simple_graph_features(g, StaticProjection(g), u);
}

PairMotifVector pair_motif_features(const TemporalGraph& g, NodeId u, NodeId v, Seconds window) {
  if (u == v) throw std::invalid_argument("pair_motif_features: u == v");
  g.require_node(u);
  g.require_node(v);
  PairMotifVector x{};
  visit_instances(g, window, MotifOrder::Both, [&](const MotifInstance& inst) {
    if (inst.contains(u) && inst.contains(v)) ++x[inst.motif.index()];
  });
  return x;
}

std::vector<CandidatePair> candidate_pairs(const TemporalGraph& txn, const FriendshipSet& friends) {
  std::vector<FriendshipSet::Pair> keys;
  keys.reserve(txn.event_count() + friends.size());
  for (const Event& e : txn.events()) {
    if (!e.is_self_loop()) keys.push_back(ordered_pair(e.src, e.dst));
  }
  keys.insert(keys.end(), friends.pairs().begin(), friends.pairs().end());
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  std::vector<CandidatePair> out;
  out.reserve(keys.size());
  for (const auto& [a, b] : keys) out.push_back({a, b, friends.contains(a, b)});
  return out;
}

std::vector<std::string> motif_feature_names(bool stratified) {
  std::vector<std::string> names;
  if (!stratified) {
    for (std::size_t c = 0; c < kMotifClassCount; ++c) names.push_back(MotifClass::from_index(c).name());
    return names;
  }
  for (std::size_t b = 0; b < kCvBucketCount; ++b) {
    for (std::size_t c = 0; c < kMotifClassCount; ++c) {
      names.push_back(MotifClass::from_index(c).name() + "@" +
                      std::string(cv_bucket_name(static_cast<CvBucket>(b))));
    }
  }
  return names;
}

FeatureMatrix ego_feature_matrix(const TemporalGraph& g, std::span<const NodeId> nodes, Seconds window,
                                 std::size_t threads) {
  FeatureMatrix m(nodes.size(), motif_feature_names());
  parallel_chunks(nodes.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const auto x = ego_motif_features(g, nodes[r], window);
      std::copy(x.begin(), x.end(), m.row(r).begin());
    }
  });
  return m;
}

FeatureMatrix stratified_feature_matrix(const TemporalGraph& g, std::span<const NodeId> nodes,
                                        Seconds window, std::size_t threads) {
  FeatureMatrix m(nodes.size(), motif_feature_names(true));
  parallel_chunks(nodes.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      const auto x = stratified_ego_features(g, nodes[r], window);
      std::copy(x.begin(), x.end(), m.row(r).begin());
    }
  });
  return m;
}

FeatureMatrix simple_feature_matrix(const TemporalGraph& g, std::span<const NodeId> nodes) {
  const StaticProjection proj(g);
  FeatureMatrix m(nodes.size(), simple_feature_names());
  for (std::size_t r = 0; r < nodes.size(); ++r) {
    const auto x = simple_graph_features(g, proj, nodes[r]).values();
    std::copy(x.begin(), x.end(), m.row(r).begin());
  }
  return m;
}

FeatureMatrix pair_feature_matrix(const TemporalGraph& g, std::span<const CandidatePair> pairs,
                                  Seconds window, std::size_t threads) {
  std::unordered_map<std::uint64_t, std::size_t> row_of;
  row_of.reserve(pairs.size() * 2);
  const auto key = [](NodeId a, NodeId b) {
    const auto p = ordered_pair(a, b);
    return (static_cast<std::uint64_t>(p.first) << 32) | p.second;
  };
  for (std::size_t r = 0; r < pairs.size(); ++r) {
    if (pairs[r].u == pairs[r].v) throw std::invalid_argument("pair_feature_matrix: u == v");
    row_of.emplace(key(pairs[r].u, pairs[r].v), r);
  }
  const std::size_t workers = std::max<std::size_t>(1, threads);
  std::vector<std::vector<std::uint64_t>> partial(workers);
  parallel_chunks(g.event_count(), workers, [&](std::size_t w, std::size_t begin, std::size_t end) {
    auto& counts = partial[w];
    counts.assign(pairs.size() * kMotifClassCount, 0);
    visit_instances(g, window, MotifOrder::Both, begin, end, [&](const MotifInstance& inst) {
      const auto set = inst.node_set();
      for (std::size_t a = 0; a < set.size(); ++a) {
        for (std::size_t b = a + 1; b < set.size(); ++b) {
          if (auto it = row_of.find(key(set[a], set[b])); it != row_of.end()) {
            ++counts[it->second * kMotifClassCount + inst.motif.index()];
          }
        }
      }
    });
  });
  FeatureMatrix m(pairs.size(), motif_feature_names());
  for (const auto& counts : partial) {
    for (std::size_t i = 0; i < counts.size(); ++i) m.values[i] += static_cast<double>(counts[i]);
  }
  return m;
}

std::vector<NodeId> active_nodes(const TemporalGraph& g) {
  std::vector<NodeId> out;
  for (const NodeId n : g.nodes()) {
    for (const EventIndex i : g.incident(n)) {
      if (!g.event(i).is_self_loop()) {
        out.push_back(n);
        break;
      }
    }
  }
  return out;
}

}  // namespace tmotif
